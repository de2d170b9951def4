#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pegswap/board.hpp"

namespace pegswap {

// The four productive move classes:
//   S  blue step right     s  red step left
//   J  blue jump right     j  red jump left
enum class Token : std::uint8_t { S, s, J, j };

char token_char(Token t);
std::optional<Token> token_from_char(char c);
Color token_color(Token t);
MoveKind token_kind(Token t);

struct MoveScript {
  std::vector<Token> tokens;

  std::size_t size() const { return tokens.size(); }
  bool empty() const { return tokens.empty(); }
  void append(Token t, std::size_t count = 1) { tokens.insert(tokens.end(), count, t); }
  void append(const MoveScript& other) {
    tokens.insert(tokens.end(), other.tokens.begin(), other.tokens.end());
  }

  bool operator==(const MoveScript&) const = default;
};

class ScriptParseError : public PuzzleError {
 public:
  // `position` is the 1-based character offset of the offending input.
  ScriptParseError(std::size_t position, const std::string& what);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class TokenError : public PuzzleError {
 public:
  using PuzzleError::PuzzleError;
};

// Accepts S/s/J/j, whitespace anywhere, and a decimal repeat count after a
// token ("j3" == "jjj").
MoveScript parse_script(std::string_view text);
// Plain form prints one letter per token; compact form run-length encodes
// runs of two or more.
std::string format_script(const MoveScript& script, bool compact = false);

// The move `t` denotes on `b`. Throws TokenError when the required cell next
// to the empty hole does not hold a peg of the token's color.
Move resolve_token(const Board& b, Token t);
std::optional<Move> try_resolve_token(const Board& b, Token t);

// Token for a productive move; nullopt for the weight-decreasing ones.
std::optional<Token> token_for(const Move& m);
// Display label for any move: the token letter for productive moves, the
// letter followed by ' for the reversed (weight-decreasing) classes.
std::string classify(const Move& m);

struct MoveCountTally {
  std::size_t total = 0;
  std::size_t steps = 0;
  std::size_t jumps = 0;
  // Indexed by Token.
  std::array<std::size_t, 4> per_token{};
  // Moves outside the productive alphabet.
  std::size_t other = 0;

  std::size_t of(Token t) const { return per_token[static_cast<std::size_t>(t)]; }
  bool operator==(const MoveCountTally&) const = default;
};

struct SolutionTrace {
  int n = 0;
  // boards.size() == moves.size() + 1; boards.front() is initial_board(n).
  std::vector<Board> boards;
  std::vector<Move> moves;
  // Weight after each move.
  std::vector<int> weight_trace;
  MoveCountTally counts;
  bool solved = false;

  const Board& final_board() const { return boards.back(); }
  int final_weight() const { return weight(boards.back()); }
};

class ReplayError : public PuzzleError {
 public:
  // `position` is the 1-based index of the failing token or move.
  ReplayError(std::size_t position, Board board, const std::string& what);
  std::size_t position() const { return position_; }
  const Board& board() const { return board_; }

 private:
  std::size_t position_;
  Board board_;
};

// Replays from initial_board(n). Throws ReplayError on the first token that
// does not resolve.
SolutionTrace replay(int n, const MoveScript& script);
// Same for an arbitrary move list (used for solutions outside the alphabet).
SolutionTrace replay(int n, const std::vector<Move>& moves);
// Replays `moves` from `start`, keeping its peg identities. Weights stay
// absolute, so weight_trace starts from weight(start).
SolutionTrace replay(const Board& start, const std::vector<Move>& moves);

}  // namespace pegswap
