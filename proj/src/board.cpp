#include "pegswap/board.hpp"

#include <algorithm>
#include <string>

namespace pegswap {

namespace {

void require_positive(int n) {
  if (n < 1) throw PuzzleError("n must be at least 1, got " + std::to_string(n));
}

char cell_char(Cell c) {
  switch (c) {
    case Cell::Red: return 'R';
    case Cell::Blue: return 'B';
    case Cell::Empty: break;
  }
  return 'O';
}

}  // namespace

char color_char(Color c) { return c == Color::Red ? 'R' : 'B'; }

std::string to_string(PegId id) { return color_char(id.color) + std::to_string(id.ordinal); }

std::string to_string(const Move& m) {
  std::string s = color_char(m.mover) == 'R' ? "red " : "blue ";
  s += m.kind == MoveKind::Step ? "step " : "jump ";
  s += std::to_string(m.from) + "->" + std::to_string(m.to);
  return s;
}

Board::Board(int n, std::vector<Cell> cells) : n_(n), empty_(-1), cells_(std::move(cells)) {
  require_positive(n);
  if (cells_.size() != static_cast<std::size_t>(2 * n + 1)) {
    throw BoardFormatError("board for n=" + std::to_string(n) + " needs " +
                           std::to_string(2 * n + 1) + " cells, got " +
                           std::to_string(cells_.size()));
  }
  int reds = 0, blues = 0, empties = 0;
  for (int i = 0; i < size(); ++i) {
    switch (cells_[static_cast<std::size_t>(i)]) {
      case Cell::Red: ++reds; break;
      case Cell::Blue: ++blues; break;
      case Cell::Empty:
        ++empties;
        empty_ = i;
        break;
    }
  }
  if (empties != 1 || reds != n || blues != n) {
    throw BoardFormatError("board must hold one empty hole and " + std::to_string(n) +
                           " pegs of each color");
  }
}

std::optional<PegId> Board::peg_at(int index) const {
  if (!has_identities()) return std::nullopt;
  Cell c = at(index);
  if (c == Cell::Empty) return std::nullopt;
  return PegId{c == Cell::Red ? Color::Red : Color::Blue,
               ordinals_[static_cast<std::size_t>(index)]};
}

int Board::position_of(PegId id) const {
  if (!has_identities()) throw PuzzleError("board does not track peg identities");
  for (int i = 0; i < size(); ++i) {
    if (cells_[static_cast<std::size_t>(i)] == cell_of(id.color) &&
        ordinals_[static_cast<std::size_t>(i)] == id.ordinal) {
      return i;
    }
  }
  throw PuzzleError("no peg " + to_string(id) + " on board");
}

Board Board::with_identities(std::span<const int> ordinals) const {
  if (ordinals.size() != cells_.size()) {
    throw BoardFormatError("identity list length does not match board");
  }
  std::vector<bool> seen_red(static_cast<std::size_t>(n_ + 1)), seen_blue(seen_red.size());
  Board out = without_identities();
  out.ordinals_.assign(cells_.size(), 0);
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    int ord = ordinals[i];
    if (cells_[i] == Cell::Empty) {
      if (ord != 0) throw BoardFormatError("empty hole cannot carry an identity");
      continue;
    }
    if (ord < 1 || ord > n_) throw BoardFormatError("peg ordinal out of range");
    auto& seen = cells_[i] == Cell::Red ? seen_red : seen_blue;
    if (seen[static_cast<std::size_t>(ord)]) throw BoardFormatError("duplicate peg identity");
    seen[static_cast<std::size_t>(ord)] = true;
    out.ordinals_[i] = static_cast<std::int16_t>(ord);
  }
  return out;
}

Board Board::with_positional_identities() const {
  std::vector<int> ords(cells_.size(), 0);
  int red = 0, blue = 0;
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    if (cells_[i] == Cell::Red) ords[i] = ++red;
    if (cells_[i] == Cell::Blue) ords[i] = ++blue;
  }
  return with_identities(ords);
}

Board Board::without_identities() const {
  Board out = *this;
  out.ordinals_.clear();
  return out;
}

Board initial_board(int n) {
  require_positive(n);
  std::vector<Cell> cells(static_cast<std::size_t>(2 * n + 1), Cell::Red);
  std::fill_n(cells.begin(), n, Cell::Blue);
  cells[static_cast<std::size_t>(n)] = Cell::Empty;
  return Board(n, std::move(cells)).with_positional_identities();
}

Board goal_board(int n) {
  require_positive(n);
  std::vector<Cell> cells(static_cast<std::size_t>(2 * n + 1), Cell::Blue);
  std::fill_n(cells.begin(), n, Cell::Red);
  cells[static_cast<std::size_t>(n)] = Cell::Empty;
  return Board(n, std::move(cells)).with_positional_identities();
}

std::string render_board(const Board& b) {
  std::string out;
  out.reserve(b.cells().size());
  for (Cell c : b.cells()) out.push_back(cell_char(c));
  return out;
}

Board parse_board(std::string_view text, int n) {
  require_positive(n);
  if (text.size() != static_cast<std::size_t>(2 * n + 1)) {
    throw BoardFormatError("board text \"" + std::string(text) + "\" has length " +
                           std::to_string(text.size()) + ", expected " +
                           std::to_string(2 * n + 1));
  }
  std::vector<Cell> cells;
  cells.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case 'R': cells.push_back(Cell::Red); break;
      case 'B': cells.push_back(Cell::Blue); break;
      case 'O': cells.push_back(Cell::Empty); break;
      default:
        throw BoardFormatError("unknown board symbol '" + std::string(1, text[i]) +
                               "' at index " + std::to_string(i));
    }
  }
  return Board(n, std::move(cells));
}

Board parse_board(std::string_view text) {
  if (text.size() < 3 || text.size() % 2 == 0) {
    throw BoardFormatError("board text must have odd length >= 3");
  }
  return parse_board(text, static_cast<int>(text.size() - 1) / 2);
}

std::vector<Move> legal_moves(const Board& b) {
  std::vector<Move> moves;
  const int e = b.empty_index();
  for (int from : {e - 2, e - 1, e + 1, e + 2}) {
    if (from < 0 || from >= b.size()) continue;
    Cell c = b.at(from);
    // Only one hole exists, so every non-empty cell at distance 1 or 2 can move.
    Move m{from == e - 1 || from == e + 1 ? MoveKind::Step : MoveKind::Jump, from, e,
           c == Cell::Red ? Color::Red : Color::Blue};
    moves.push_back(m);
  }
  return moves;
}

bool is_legal(const Board& b, const Move& m) {
  if (m.to != b.empty_index()) return false;
  if (m.from < 0 || m.from >= b.size()) return false;
  if (b.at(m.from) != cell_of(m.mover)) return false;
  const int d = m.distance();
  if (m.kind == MoveKind::Step) return d == 1;
  return d == 2 && b.at(m.over()) != Cell::Empty;
}

Board apply_move(const Board& b, const Move& m) {
  if (!is_legal(b, m)) {
    throw IllegalMove("illegal move " + to_string(m) + " on " + render_board(b));
  }
  Board out = b;
  auto from = static_cast<std::size_t>(m.from);
  auto to = static_cast<std::size_t>(m.to);
  std::swap(out.cells_[from], out.cells_[to]);
  if (out.has_identities()) std::swap(out.ordinals_[from], out.ordinals_[to]);
  out.empty_ = m.from;
  return out;
}

Move reverse_move(const Move& m) { return Move{m.kind, m.to, m.from, m.mover}; }

int weight(const Board& b) {
  const int n = b.n();
  // Initial blue indices sum to n(n-1)/2, initial red indices to n(3n+1)/2.
  int blue_sum = 0, red_sum = 0;
  for (int i = 0; i < b.size(); ++i) {
    if (b.at(i) == Cell::Blue) blue_sum += i;
    if (b.at(i) == Cell::Red) red_sum += i;
  }
  return (blue_sum - n * (n - 1) / 2) + (n * (3 * n + 1) / 2 - red_sum);
}

int weight_delta(const Move& m) { return m.productive() ? m.distance() : -m.distance(); }

int move_weight_delta(const Board& b, const Move& m) {
  if (!is_legal(b, m)) {
    throw IllegalMove("illegal move " + to_string(m) + " on " + render_board(b));
  }
  return weight_delta(m);
}

}  // namespace pegswap
