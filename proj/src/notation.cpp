#include "pegswap/notation.hpp"

#include <cctype>

namespace pegswap {

namespace {

// Largest repeat count accepted after a token.
constexpr std::size_t kMaxRepeat = 100'000'000;

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

void tally(MoveCountTally& counts, const Move& m) {
  ++counts.total;
  if (m.kind == MoveKind::Step) ++counts.steps;
  else ++counts.jumps;
  if (auto t = token_for(m)) ++counts.per_token[static_cast<std::size_t>(*t)];
  else ++counts.other;
}

}  // namespace

char token_char(Token t) {
  switch (t) {
    case Token::S: return 'S';
    case Token::s: return 's';
    case Token::J: return 'J';
    case Token::j: return 'j';
  }
  return '?';
}

std::optional<Token> token_from_char(char c) {
  switch (c) {
    case 'S': return Token::S;
    case 's': return Token::s;
    case 'J': return Token::J;
    case 'j': return Token::j;
    default: return std::nullopt;
  }
}

Color token_color(Token t) { return t == Token::S || t == Token::J ? Color::Blue : Color::Red; }

MoveKind token_kind(Token t) {
  return t == Token::S || t == Token::s ? MoveKind::Step : MoveKind::Jump;
}

ScriptParseError::ScriptParseError(std::size_t position, const std::string& what)
    : PuzzleError("parse error at position " + std::to_string(position) + ": " + what),
      position_(position) {}

MoveScript parse_script(std::string_view text) {
  MoveScript out;
  std::optional<Token> last;  // token a following count applies to
  bool counted = false;       // `last` already received a count
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (is_space(c)) {
      ++i;
      continue;
    }
    if (is_digit(c)) {
      const std::size_t start = i;
      if (!last || counted) throw ScriptParseError(start + 1, "count without a token");
      std::size_t k = 0;
      // Whitespace is insignificant, so digits split by blanks form one count.
      while (i < text.size() && (is_digit(text[i]) || is_space(text[i]))) {
        if (is_digit(text[i])) {
          k = k * 10 + static_cast<std::size_t>(text[i] - '0');
          if (k > kMaxRepeat) throw ScriptParseError(start + 1, "repeat count too large");
        }
        ++i;
      }
      if (k == 0) throw ScriptParseError(start + 1, "repeat count must be at least 1");
      out.append(*last, k - 1);
      counted = true;
      continue;
    }
    auto t = token_from_char(c);
    if (!t) {
      throw ScriptParseError(i + 1, std::string("unexpected character '") + c + "'");
    }
    out.append(*t);
    last = t;
    counted = false;
    ++i;
  }
  return out;
}

std::string format_script(const MoveScript& script, bool compact) {
  std::string out;
  const auto& toks = script.tokens;
  for (std::size_t i = 0; i < toks.size();) {
    std::size_t run = 1;
    if (compact) {
      while (i + run < toks.size() && toks[i + run] == toks[i]) ++run;
    }
    out.push_back(token_char(toks[i]));
    if (run >= 2) out += std::to_string(run);
    i += run;
  }
  return out;
}

std::optional<Move> try_resolve_token(const Board& b, Token t) {
  const Color color = token_color(t);
  const MoveKind kind = token_kind(t);
  const int dist = kind == MoveKind::Step ? 1 : 2;
  // Blue tokens move right, so the mover sits left of the hole; red mirrors.
  const int from = color == Color::Blue ? b.empty_index() - dist : b.empty_index() + dist;
  if (from < 0 || from >= b.size() || b.at(from) != cell_of(color)) return std::nullopt;
  return Move{kind, from, b.empty_index(), color};
}

Move resolve_token(const Board& b, Token t) {
  if (auto m = try_resolve_token(b, t)) return *m;
  throw TokenError(std::string("token ") + token_char(t) + " does not apply to " +
                   render_board(b));
}

std::optional<Token> token_for(const Move& m) {
  if (!m.productive()) return std::nullopt;
  if (m.mover == Color::Blue) return m.kind == MoveKind::Step ? Token::S : Token::J;
  return m.kind == MoveKind::Step ? Token::s : Token::j;
}

std::string classify(const Move& m) {
  if (auto t = token_for(m)) return std::string(1, token_char(*t));
  const char base = m.mover == Color::Blue ? (m.kind == MoveKind::Step ? 'S' : 'J')
                                           : (m.kind == MoveKind::Step ? 's' : 'j');
  return std::string(1, base) + "'";
}

ReplayError::ReplayError(std::size_t position, Board board, const std::string& what)
    : PuzzleError(what), position_(position), board_(std::move(board)) {}

SolutionTrace replay(int n, const MoveScript& script) {
  SolutionTrace trace;
  trace.n = n;
  trace.boards.push_back(initial_board(n));
  trace.moves.reserve(script.size());
  trace.weight_trace.reserve(script.size());
  int w = 0;
  for (std::size_t k = 0; k < script.size(); ++k) {
    const Board& b = trace.boards.back();
    auto m = try_resolve_token(b, script.tokens[k]);
    if (!m) {
      throw ReplayError(k + 1, b,
                        "token " + std::to_string(k + 1) + " inapplicable: '" +
                            token_char(script.tokens[k]) + "' on " + render_board(b));
    }
    w += weight_delta(*m);
    trace.boards.push_back(apply_move(b, *m));
    trace.moves.push_back(*m);
    trace.weight_trace.push_back(w);
    tally(trace.counts, *m);
  }
  trace.solved = trace.boards.back() == goal_board(n);
  return trace;
}

SolutionTrace replay(int n, const std::vector<Move>& moves) {
  return replay(initial_board(n), moves);
}

SolutionTrace replay(const Board& start, const std::vector<Move>& moves) {
  const int n = start.n();
  SolutionTrace trace;
  trace.n = n;
  trace.boards.push_back(start);
  trace.moves.reserve(moves.size());
  int w = weight(start);
  for (std::size_t k = 0; k < moves.size(); ++k) {
    const Board& b = trace.boards.back();
    if (!is_legal(b, moves[k])) {
      throw ReplayError(k + 1, b,
                        "move " + std::to_string(k + 1) + " illegal: " + to_string(moves[k]) +
                            " on " + render_board(b));
    }
    w += weight_delta(moves[k]);
    trace.boards.push_back(apply_move(b, moves[k]));
    trace.moves.push_back(moves[k]);
    trace.weight_trace.push_back(w);
    tally(trace.counts, moves[k]);
  }
  trace.solved = trace.boards.back() == goal_board(n);
  return trace;
}

}  // namespace pegswap
