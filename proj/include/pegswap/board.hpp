#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pegswap {

// Base of every error raised by the library.
class PuzzleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class BoardFormatError : public PuzzleError {
 public:
  using PuzzleError::PuzzleError;
};

class IllegalMove : public PuzzleError {
 public:
  using PuzzleError::PuzzleError;
};

enum class Color : std::uint8_t { Red, Blue };
enum class Cell : std::uint8_t { Empty, Red, Blue };

constexpr Cell cell_of(Color c) { return c == Color::Red ? Cell::Red : Cell::Blue; }
constexpr Color opposite(Color c) { return c == Color::Red ? Color::Blue : Color::Red; }
char color_char(Color c);

// Stable identity of one peg: its color and its 1-based ordinal counted
// left-to-right within that color at the starting position.
struct PegId {
  Color color = Color::Blue;
  int ordinal = 0;

  auto operator<=>(const PegId&) const = default;
};

std::string to_string(PegId id);

enum class MoveKind : std::uint8_t { Step, Jump };

struct Move {
  MoveKind kind = MoveKind::Step;
  int from = 0;
  int to = 0;
  Color mover = Color::Blue;

  int distance() const { return to > from ? to - from : from - to; }
  bool rightward() const { return to > from; }
  // Jumps only: the cell passed over.
  int over() const { return (from + to) / 2; }
  // Blue moving right or red moving left.
  bool productive() const { return rightward() == (mover == Color::Blue); }

  bool operator==(const Move&) const = default;
};

std::string to_string(const Move& m);

// The row of 2n+1 holes. Holds exactly one empty hole and n pegs of each
// color; the constructor rejects anything else. Peg identities are optional
// and only carried when the board was built with them.
class Board {
 public:
  Board(int n, std::vector<Cell> cells);

  int n() const { return n_; }
  int size() const { return static_cast<int>(cells_.size()); }
  Cell at(int index) const { return cells_.at(static_cast<std::size_t>(index)); }
  int empty_index() const { return empty_; }
  std::span<const Cell> cells() const { return cells_; }

  bool has_identities() const { return !ordinals_.empty(); }
  // Identity of the peg at `index`; nullopt for the empty hole or when
  // identities are not tracked.
  std::optional<PegId> peg_at(int index) const;
  // Cell currently holding `id`. Requires identities.
  int position_of(PegId id) const;

  // Attaches identities given as one ordinal per cell (0 at the empty hole).
  // The ordinals of each color must be a permutation of 1..n.
  Board with_identities(std::span<const int> ordinals) const;
  // Numbers each color 1..n from left to right.
  Board with_positional_identities() const;
  Board without_identities() const;

  // Layout equality; identities are ignored.
  bool operator==(const Board& other) const { return n_ == other.n_ && cells_ == other.cells_; }
  // Layout and identities both equal.
  bool identical(const Board& other) const {
    return *this == other && ordinals_ == other.ordinals_;
  }

 private:
  friend Board apply_move(const Board& b, const Move& m);

  int n_;
  int empty_;
  std::vector<Cell> cells_;
  std::vector<std::int16_t> ordinals_;
};

// B^n O R^n with positional identities.
Board initial_board(int n);
// R^n O B^n with positional identities.
Board goal_board(int n);

std::string render_board(const Board& b);
Board parse_board(std::string_view text, int n);
// Infers n from the length of `text`.
Board parse_board(std::string_view text);

// Every move into the empty hole, ordered by source index.
std::vector<Move> legal_moves(const Board& b);
bool is_legal(const Board& b, const Move& m);
// Throws IllegalMove when `m` is not legal on `b`.
Board apply_move(const Board& b, const Move& m);
// Move that undoes `m` once it has been applied.
Move reverse_move(const Move& m);

// Rightward displacement of the blue pegs plus leftward displacement of the
// red pegs, relative to initial_board(n).
int weight(const Board& b);
// Signed weight change of `m`: +-1 for steps, +-2 for jumps, positive when the
// mover travels in its color's productive direction.
int move_weight_delta(const Board& b, const Move& m);
int weight_delta(const Move& m);

}  // namespace pegswap
