#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "pegswap/board.hpp"

namespace pegswap {

// Board packed into one word: the empty-hole index sits above a (2n+1)-bit
// mask of red cells. Bit i of the mask is cell i.
using PackedState = std::uint64_t;

PackedState encode_state(const Board& b);
// Throws BoardFormatError for a wrong red count, an out-of-range empty index,
// or a red bit set on the empty hole.
Board decode_state(PackedState p, int n);

class FeasibilityError : public PuzzleError {
 public:
  using PuzzleError::PuzzleError;
};

enum class StateStorage { Auto, RankTable, HashSet };

struct SearchConfig {
  // Largest n the oracle agrees to search.
  int max_n = 12;
  // Upper bound on the visited structure; searches that would exceed it are
  // refused before any allocation.
  std::size_t memory_budget_bytes = std::size_t{3} << 30;
  // Frontier expansion threads (RankTable storage only).
  int workers = 1;
  StateStorage storage = StateStorage::Auto;
};

// Perfect ranking of the (2n+1) * C(2n, n) boards of size n: the empty index
// times C(2n, n) plus the colex rank of the red subset among the 2n pegs.
class StateIndexer {
 public:
  explicit StateIndexer(int n);

  int n() const { return n_; }
  std::uint64_t size() const { return size_; }
  std::uint64_t rank(int empty, std::uint64_t red_mask) const;
  std::uint64_t rank(PackedState p) const;
  PackedState unrank(std::uint64_t index) const;

 private:
  std::uint64_t choose(int a, int b) const {
    return binom_[static_cast<std::size_t>(a) * static_cast<std::size_t>(n_ + 1) +
                  static_cast<std::size_t>(b)];
  }

  int n_;
  int cells_;
  std::uint64_t subsets_;
  std::uint64_t size_;
  std::vector<std::uint64_t> binom_;  // C(a, b) for a <= 2n, b <= n
};

// Bytes the visited structure needs for a full search at size n.
std::size_t estimated_search_bytes(int n, StateStorage storage = StateStorage::RankTable);

struct SearchResult {
  int n = 0;
  // Shortest distance from initial_board(n) to goal_board(n); nullopt when
  // the goal is unreachable.
  std::optional<int> min_moves;
  std::uint64_t reachable_states = 0;
  // Present when requested: min_moves moves from initial to goal.
  std::vector<Move> witness;
  std::uint64_t peak_frontier = 0;
  // Largest BFS depth reached (eccentricity of the initial board).
  int max_depth = 0;
};

// Exhaustive breadth-first search from initial_board(n). The result is the
// same for every worker count.
SearchResult bfs_min_moves(int n, bool want_path = false, const SearchConfig& config = {});

// Meet-in-the-middle search from both ends. Reports only the distance.
std::optional<int> bidirectional_min_moves(int n, const SearchConfig& config = {});

// Every state reachable from initial_board(n).
class ReachableSet {
 public:
  int n() const { return n_; }
  std::uint64_t count() const { return count_; }
  bool contains(const Board& b) const;
  // Visits states in rank order.
  void for_each(const std::function<void(PackedState)>& visit) const;
  std::vector<Board> boards() const;

 private:
  friend ReachableSet enumerate_reachable(int n, const SearchConfig& config);
  explicit ReachableSet(int n) : n_(n), indexer_(n) {}

  int n_;
  StateIndexer indexer_;
  std::vector<std::uint64_t> bits_;
  std::uint64_t count_ = 0;
};

ReachableSet enumerate_reachable(int n, const SearchConfig& config = {});

// Exact BFS distance from initial_board(n) for every state. One byte per
// state; intended for small n.
class DistanceMap {
 public:
  static constexpr std::uint8_t kUnreached = 0xFF;

  int n() const { return indexer_.n(); }
  std::optional<int> distance(const Board& b) const;
  std::optional<int> distance(PackedState p) const;

 private:
  friend DistanceMap distance_map(int n, const SearchConfig& config);
  explicit DistanceMap(int n) : indexer_(n) {}

  StateIndexer indexer_;
  std::vector<std::uint8_t> dist_;
};

DistanceMap distance_map(int n, const SearchConfig& config = {});

// Longest run of consecutive weight-increasing jumps playable from any
// reachable state. Refuses n > max_n.
int max_increasing_jump_run(int n, int max_n = 5);

// Distances along a replayed path; the path is geodesic when every move
// increases the BFS distance by exactly one.
struct GeodesicReport {
  std::vector<int> distances;
  bool nondecreasing = true;
  bool geodesic = true;
  // First move index (0-based) where the distance did not rise by one.
  std::optional<std::size_t> first_violation;
};

GeodesicReport check_geodesic(int n, const std::vector<Move>& moves, int max_n = 8);

}  // namespace pegswap
