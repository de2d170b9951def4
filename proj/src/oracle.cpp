#include "pegswap/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <string>
#include <thread>
#include <unordered_map>

namespace pegswap {

namespace {

int cell_count(int n) { return 2 * n + 1; }
std::uint64_t full_mask(int n) { return (std::uint64_t{1} << cell_count(n)) - 1; }

int empty_of(PackedState p, int n) { return static_cast<int>(p >> cell_count(n)); }
std::uint64_t reds_of(PackedState p, int n) { return p & full_mask(n); }
PackedState pack(int empty, std::uint64_t reds, int n) {
  return (static_cast<std::uint64_t>(empty) << cell_count(n)) | reds;
}

PackedState initial_state(int n) { return encode_state(initial_board(n)); }
PackedState goal_state(int n) { return encode_state(goal_board(n)); }

// Calls fn(next_state) for each legal move out of `p`.
template <typename Fn>
void for_each_successor(PackedState p, int n, Fn&& fn) {
  const int e = empty_of(p, n);
  const std::uint64_t reds = reds_of(p, n);
  const int cells = cell_count(n);
  for (int from : {e - 2, e - 1, e + 1, e + 2}) {
    if (from < 0 || from >= cells) continue;
    const std::uint64_t from_bit = std::uint64_t{1} << from;
    std::uint64_t next = reds;
    if (reds & from_bit) next = (reds & ~from_bit) | (std::uint64_t{1} << e);
    fn(pack(from, next, n));
  }
}

// Move from state `a` to its neighbor `b`.
Move move_between(PackedState a, PackedState b, int n) {
  const int ea = empty_of(a, n);
  const int eb = empty_of(b, n);
  const bool red = (reds_of(a, n) >> eb) & 1U;
  const int d = ea > eb ? ea - eb : eb - ea;
  return Move{d == 1 ? MoveKind::Step : MoveKind::Jump, eb, ea, red ? Color::Red : Color::Blue};
}

void check_feasible(int n, int max_n) {
  if (n < 1) throw PuzzleError("n must be at least 1, got " + std::to_string(n));
  if (n > max_n) {
    throw FeasibilityError("n=" + std::to_string(n) + " exceeds the search bound of " +
                           std::to_string(max_n));
  }
  // The packed word holds 2n+1 mask bits plus the empty index.
  if (cell_count(n) + 6 > 64) throw FeasibilityError("n too large for a packed state");
}

StateStorage pick_storage(int n, const SearchConfig& config) {
  StateStorage s = config.storage;
  if (s == StateStorage::Auto) {
    s = estimated_search_bytes(n, StateStorage::RankTable) <= config.memory_budget_bytes
            ? StateStorage::RankTable
            : StateStorage::HashSet;
  }
  if (estimated_search_bytes(n, s) > config.memory_budget_bytes) {
    throw FeasibilityError("search for n=" + std::to_string(n) + " needs about " +
                           std::to_string(estimated_search_bytes(n, s) >> 20) +
                           " MiB, over the memory budget");
  }
  return s;
}

// Two bits per rank holding (BFS depth mod 3); 3 marks unvisited. Adjacent
// states differ in depth by at most one, so the residue alone tells a
// predecessor layer from the current and next ones.
class DepthTable {
 public:
  static constexpr unsigned kUnvisited = 3;

  explicit DepthTable(std::uint64_t size) : words_((size + 31) / 32, ~std::uint64_t{0}) {}

  unsigned get(std::uint64_t i) const {
    return static_cast<unsigned>(words_[i / 32] >> (2 * (i % 32))) & 3U;
  }

  bool claim(std::uint64_t i, unsigned residue) {
    auto& w = words_[i / 32];
    const unsigned shift = 2 * (i % 32);
    if (((w >> shift) & 3U) != kUnvisited) return false;
    w &= ~(std::uint64_t{3 - residue} << shift);
    return true;
  }

  bool claim_atomic(std::uint64_t i, unsigned residue) {
    std::atomic_ref<std::uint64_t> w(words_[i / 32]);
    const unsigned shift = 2 * (i % 32);
    std::uint64_t cur = w.load(std::memory_order_relaxed);
    while (true) {
      if (((cur >> shift) & 3U) != kUnvisited) return false;
      const std::uint64_t next = cur & ~(std::uint64_t{3 - residue} << shift);
      if (w.compare_exchange_weak(cur, next, std::memory_order_relaxed)) return true;
    }
  }

  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  std::vector<std::uint64_t> words_;
};

struct RankSearch {
  StateIndexer indexer;
  DepthTable table;
  std::uint64_t reached = 0;
  std::uint64_t peak_frontier = 0;
  int max_depth = 0;
  std::optional<int> goal_depth;
};

// Layered BFS over the rank table. With workers > 1 the frontier is split
// into contiguous chunks; the claimed set per layer does not depend on the
// split, so every reported quantity is identical to the sequential run.
RankSearch rank_bfs(int n, int workers) {
  StateIndexer indexer(n);
  const std::uint64_t size = indexer.size();
  RankSearch s{std::move(indexer), DepthTable(size), 0, 0, 0, std::nullopt};
  const std::uint64_t start = s.indexer.rank(initial_state(n));
  const std::uint64_t goal = s.indexer.rank(goal_state(n));
  s.table.claim(start, 0);
  s.reached = 1;
  if (start == goal) s.goal_depth = 0;

  std::vector<std::uint64_t> frontier{start};
  std::vector<std::uint64_t> next;
  int depth = 0;
  workers = std::max(1, workers);

  while (!frontier.empty()) {
    s.peak_frontier = std::max<std::uint64_t>(s.peak_frontier, frontier.size());
    const unsigned residue = static_cast<unsigned>((depth + 1) % 3);
    next.clear();
    // Small layers are not worth a thread hand-off.
    if (workers == 1 || frontier.size() < 4096) {
      for (std::uint64_t r : frontier) {
        for_each_successor(s.indexer.unrank(r), n, [&](PackedState q) {
          const std::uint64_t qr = s.indexer.rank(q);
          if (s.table.claim(qr, residue)) next.push_back(qr);
        });
      }
    } else {
      std::vector<std::vector<std::uint64_t>> parts(static_cast<std::size_t>(workers));
      {
        std::vector<std::jthread> pool;
        const std::size_t chunk = (frontier.size() + parts.size() - 1) / parts.size();
        for (std::size_t w = 0; w < parts.size(); ++w) {
          pool.emplace_back([&, w] {
            const std::size_t lo = std::min(frontier.size(), w * chunk);
            const std::size_t hi = std::min(frontier.size(), lo + chunk);
            auto& out = parts[w];
            for (std::size_t i = lo; i < hi; ++i) {
              for_each_successor(s.indexer.unrank(frontier[i]), n, [&](PackedState q) {
                const std::uint64_t qr = s.indexer.rank(q);
                if (s.table.claim_atomic(qr, residue)) out.push_back(qr);
              });
            }
          });
        }
      }
      for (auto& part : parts) next.insert(next.end(), part.begin(), part.end());
    }
    if (!next.empty()) {
      ++depth;
      s.max_depth = depth;
      s.reached += next.size();
      if (!s.goal_depth && s.table.get(goal) != DepthTable::kUnvisited) s.goal_depth = depth;
    }
    std::swap(frontier, next);
  }
  return s;
}

std::vector<Move> walk_back(const RankSearch& s, int n) {
  std::vector<Move> path;
  if (!s.goal_depth) return path;
  PackedState cur = goal_state(n);
  for (int d = *s.goal_depth; d > 0; --d) {
    const unsigned want = static_cast<unsigned>((d - 1) % 3);
    std::optional<PackedState> prev;
    for_each_successor(cur, n, [&](PackedState q) {
      if (!prev && s.table.get(s.indexer.rank(q)) == want) prev = q;
    });
    // Moves are reversible, so some neighbor always sits one layer closer.
    path.push_back(move_between(*prev, cur, n));
    cur = *prev;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

SearchResult hash_bfs(int n, bool want_path) {
  std::unordered_map<PackedState, std::uint8_t> seen;  // state -> depth mod 3
  const PackedState start = initial_state(n);
  const PackedState goal = goal_state(n);
  seen.emplace(start, 0);
  SearchResult r;
  r.n = n;
  if (start == goal) r.min_moves = 0;
  std::vector<PackedState> frontier{start}, next;
  int depth = 0;
  while (!frontier.empty()) {
    r.peak_frontier = std::max<std::uint64_t>(r.peak_frontier, frontier.size());
    next.clear();
    const auto residue = static_cast<std::uint8_t>((depth + 1) % 3);
    for (PackedState p : frontier) {
      for_each_successor(p, n, [&](PackedState q) {
        if (seen.emplace(q, residue).second) next.push_back(q);
      });
    }
    if (!next.empty()) {
      ++depth;
      r.max_depth = depth;
      if (!r.min_moves && seen.contains(goal)) r.min_moves = depth;
    }
    std::swap(frontier, next);
  }
  r.reachable_states = seen.size();
  if (want_path && r.min_moves) {
    PackedState cur = goal;
    for (int d = *r.min_moves; d > 0; --d) {
      const auto want = static_cast<std::uint8_t>((d - 1) % 3);
      std::optional<PackedState> prev;
      for_each_successor(cur, n, [&](PackedState q) {
        auto it = seen.find(q);
        if (!prev && it != seen.end() && it->second == want) prev = q;
      });
      r.witness.push_back(move_between(*prev, cur, n));
      cur = *prev;
    }
    std::reverse(r.witness.begin(), r.witness.end());
  }
  return r;
}

// Byte distances from `source` over the whole rank space.
std::vector<std::uint8_t> byte_bfs(const StateIndexer& indexer, PackedState source) {
  const int n = indexer.n();
  std::vector<std::uint8_t> dist(indexer.size(), DistanceMap::kUnreached);
  std::vector<std::uint64_t> frontier{indexer.rank(source)}, next;
  dist[frontier.front()] = 0;
  for (int depth = 0; !frontier.empty(); ++depth) {
    next.clear();
    for (std::uint64_t r : frontier) {
      for_each_successor(indexer.unrank(r), n, [&](PackedState q) {
        const std::uint64_t qr = indexer.rank(q);
        if (dist[qr] == DistanceMap::kUnreached) {
          dist[qr] = static_cast<std::uint8_t>(depth + 1);
          next.push_back(qr);
        }
      });
    }
    std::swap(frontier, next);
  }
  return dist;
}

}  // namespace

PackedState encode_state(const Board& b) {
  std::uint64_t reds = 0;
  for (int i = 0; i < b.size(); ++i) {
    if (b.at(i) == Cell::Red) reds |= std::uint64_t{1} << i;
  }
  return pack(b.empty_index(), reds, b.n());
}

Board decode_state(PackedState p, int n) {
  if (n < 1 || cell_count(n) + 6 > 64) throw BoardFormatError("unsupported n for packed state");
  const int e = static_cast<int>(p >> cell_count(n));
  const std::uint64_t reds = reds_of(p, n);
  if (e >= cell_count(n)) throw BoardFormatError("packed empty index out of range");
  if (std::popcount(reds) != n) throw BoardFormatError("packed red mask must have n bits set");
  if ((reds >> e) & 1U) throw BoardFormatError("packed red mask marks the empty hole");
  std::vector<Cell> cells(static_cast<std::size_t>(cell_count(n)), Cell::Blue);
  for (int i = 0; i < cell_count(n); ++i) {
    if (i == e) cells[static_cast<std::size_t>(i)] = Cell::Empty;
    else if ((reds >> i) & 1U) cells[static_cast<std::size_t>(i)] = Cell::Red;
  }
  return Board(n, std::move(cells));
}

StateIndexer::StateIndexer(int n) : n_(n), cells_(cell_count(n)) {
  if (n < 1 || cells_ + 6 > 64) throw PuzzleError("unsupported n for state indexing");
  const auto width = static_cast<std::size_t>(n + 1);
  binom_.assign(static_cast<std::size_t>(2 * n + 1) * width, 0);
  for (int a = 0; a <= 2 * n; ++a) {
    binom_[static_cast<std::size_t>(a) * width] = 1;
    for (int b = 1; b <= std::min(a, n); ++b) {
      binom_[static_cast<std::size_t>(a) * width + static_cast<std::size_t>(b)] =
          choose(a - 1, b - 1) + (b <= a - 1 ? choose(a - 1, b) : 0);
    }
  }
  subsets_ = choose(2 * n, n);
  size_ = subsets_ * static_cast<std::uint64_t>(cells_);
}

std::uint64_t StateIndexer::rank(int empty, std::uint64_t red_mask) const {
  // Drop the empty cell so the reds form an n-subset of 2n peg slots.
  const std::uint64_t low = red_mask & ((std::uint64_t{1} << empty) - 1);
  std::uint64_t packed = low | ((red_mask >> (empty + 1)) << empty);
  std::uint64_t r = 0;
  int k = 0;
  while (packed) {
    const int p = std::countr_zero(packed);
    packed &= packed - 1;
    ++k;
    r += choose(p, k);
  }
  return static_cast<std::uint64_t>(empty) * subsets_ + r;
}

std::uint64_t StateIndexer::rank(PackedState p) const {
  return rank(empty_of(p, n_), reds_of(p, n_));
}

PackedState StateIndexer::unrank(std::uint64_t index) const {
  const int empty = static_cast<int>(index / subsets_);
  std::uint64_t r = index % subsets_;
  std::uint64_t packed = 0;
  int k = n_;
  for (int p = 2 * n_ - 1; p >= 0 && k > 0; --p) {
    const std::uint64_t c = p >= k ? choose(p, k) : 0;
    if (c <= r) {
      packed |= std::uint64_t{1} << p;
      r -= c;
      --k;
    }
  }
  const std::uint64_t low = packed & ((std::uint64_t{1} << empty) - 1);
  const std::uint64_t reds = low | ((packed >> empty) << (empty + 1));
  return pack(empty, reds, n_);
}

std::size_t estimated_search_bytes(int n, StateStorage storage) {
  const std::uint64_t states = StateIndexer(n).size();
  if (storage == StateStorage::HashSet) {
    // Node-based map: key, value, next pointer, bucket slot and allocator slack.
    return static_cast<std::size_t>(states * 48);
  }
  // Two-bit table plus an allowance for two frontier layers of ranks.
  return static_cast<std::size_t>((states + 31) / 32 * 8 + states / 2 * 8);
}

SearchResult bfs_min_moves(int n, bool want_path, const SearchConfig& config) {
  check_feasible(n, config.max_n);
  if (pick_storage(n, config) == StateStorage::HashSet) return hash_bfs(n, want_path);
  RankSearch s = rank_bfs(n, config.workers);
  SearchResult r;
  r.n = n;
  r.min_moves = s.goal_depth;
  r.reachable_states = s.reached;
  r.peak_frontier = s.peak_frontier;
  r.max_depth = s.max_depth;
  if (want_path) r.witness = walk_back(s, n);
  return r;
}

std::optional<int> bidirectional_min_moves(int n, const SearchConfig& config) {
  check_feasible(n, config.max_n);
  const StateIndexer indexer(n);
  // Two byte tables instead of one two-bit table.
  if (indexer.size() * 2 > config.memory_budget_bytes) {
    throw FeasibilityError("bidirectional search for n=" + std::to_string(n) +
                           " exceeds the memory budget");
  }
  std::vector<std::uint8_t> dist[2] = {
      std::vector<std::uint8_t>(indexer.size(), DistanceMap::kUnreached),
      std::vector<std::uint8_t>(indexer.size(), DistanceMap::kUnreached)};
  std::vector<std::uint64_t> frontier[2] = {{indexer.rank(initial_state(n))},
                                            {indexer.rank(goal_state(n))}};
  if (frontier[0] == frontier[1]) return 0;
  int depth[2] = {0, 0};
  dist[0][frontier[0][0]] = 0;
  dist[1][frontier[1][0]] = 0;

  while (!frontier[0].empty() && !frontier[1].empty()) {
    const int side = frontier[0].size() <= frontier[1].size() ? 0 : 1;
    const int other = 1 - side;
    std::vector<std::uint64_t> next;
    std::optional<int> best;
    for (std::uint64_t r : frontier[side]) {
      for_each_successor(indexer.unrank(r), n, [&](PackedState q) {
        const std::uint64_t qr = indexer.rank(q);
        if (dist[side][qr] != DistanceMap::kUnreached) return;
        dist[side][qr] = static_cast<std::uint8_t>(depth[side] + 1);
        next.push_back(qr);
        if (dist[other][qr] != DistanceMap::kUnreached) {
          const int total = depth[side] + 1 + dist[other][qr];
          if (!best || total < *best) best = total;
        }
      });
    }
    // The first layer that touches the other side already holds a shortest
    // meeting point.
    if (best) return best;
    ++depth[side];
    frontier[side] = std::move(next);
  }
  return std::nullopt;
}

bool ReachableSet::contains(const Board& b) const {
  if (b.n() != n_) return false;
  const std::uint64_t r = indexer_.rank(encode_state(b));
  return (bits_[r / 64] >> (r % 64)) & 1U;
}

void ReachableSet::for_each(const std::function<void(PackedState)>& visit) const {
  for (std::size_t w = 0; w < bits_.size(); ++w) {
    std::uint64_t word = bits_[w];
    while (word) {
      const int bit = std::countr_zero(word);
      word &= word - 1;
      visit(indexer_.unrank(w * 64 + static_cast<std::uint64_t>(bit)));
    }
  }
}

std::vector<Board> ReachableSet::boards() const {
  std::vector<Board> out;
  out.reserve(count_);
  for_each([&](PackedState p) { out.push_back(decode_state(p, n_)); });
  return out;
}

ReachableSet enumerate_reachable(int n, const SearchConfig& config) {
  check_feasible(n, config.max_n);
  if (estimated_search_bytes(n) > config.memory_budget_bytes) {
    throw FeasibilityError("enumeration for n=" + std::to_string(n) +
                           " exceeds the memory budget");
  }
  RankSearch s = rank_bfs(n, config.workers);
  ReachableSet out(n);
  out.bits_.assign((s.indexer.size() + 63) / 64, 0);
  for (std::uint64_t r = 0; r < s.indexer.size(); ++r) {
    if (s.table.get(r) != DepthTable::kUnvisited) out.bits_[r / 64] |= std::uint64_t{1} << (r % 64);
  }
  out.count_ = s.reached;
  return out;
}

std::optional<int> DistanceMap::distance(PackedState p) const {
  const std::uint8_t d = dist_[indexer_.rank(p)];
  if (d == kUnreached) return std::nullopt;
  return d;
}

std::optional<int> DistanceMap::distance(const Board& b) const {
  if (b.n() != n()) throw PuzzleError("board size does not match distance map");
  return distance(encode_state(b));
}

DistanceMap distance_map(int n, const SearchConfig& config) {
  check_feasible(n, config.max_n);
  DistanceMap out(n);
  if (out.indexer_.size() > config.memory_budget_bytes) {
    throw FeasibilityError("distance map for n=" + std::to_string(n) +
                           " exceeds the memory budget");
  }
  out.dist_ = byte_bfs(out.indexer_, initial_state(n));
  return out;
}

int max_increasing_jump_run(int n, int max_n) {
  check_feasible(n, max_n);
  const StateIndexer indexer(n);
  const std::vector<std::uint8_t> dist = byte_bfs(indexer, initial_state(n));
  // run[r]: longest chain of weight-increasing jumps starting at rank r. Such
  // jumps strictly raise the weight, so the chains form a DAG.
  std::vector<std::int16_t> run(indexer.size(), -1);
  std::vector<std::uint64_t> stack;
  int best = 0;
  for (std::uint64_t root = 0; root < indexer.size(); ++root) {
    if (dist[root] == DistanceMap::kUnreached || run[root] >= 0) continue;
    stack.push_back(root);
    while (!stack.empty()) {
      const std::uint64_t r = stack.back();
      if (run[r] >= 0) {
        stack.pop_back();
        continue;
      }
      const PackedState p = indexer.unrank(r);
      const int e = empty_of(p, n);
      const std::uint64_t reds = reds_of(p, n);
      bool pending = false;
      int longest = 0;
      // A blue jump right comes from e-2, a red jump left from e+2.
      for (int from : {e - 2, e + 2}) {
        if (from < 0 || from >= cell_count(n)) continue;
        const bool red = (reds >> from) & 1U;
        if (red != (from > e)) continue;
        std::uint64_t next = reds;
        if (red) next = (reds & ~(std::uint64_t{1} << from)) | (std::uint64_t{1} << e);
        const std::uint64_t qr = indexer.rank(pack(from, next, n));
        if (run[qr] < 0) {
          stack.push_back(qr);
          pending = true;
        } else {
          longest = std::max(longest, 1 + run[qr]);
        }
      }
      if (pending) continue;
      run[r] = static_cast<std::int16_t>(longest);
      best = std::max(best, longest);
      stack.pop_back();
    }
  }
  return best;
}

GeodesicReport check_geodesic(int n, const std::vector<Move>& moves, int max_n) {
  SearchConfig config;
  config.max_n = max_n;
  const DistanceMap dm = distance_map(n, config);
  GeodesicReport rep;
  Board b = initial_board(n);
  rep.distances.push_back(*dm.distance(b));
  for (std::size_t i = 0; i < moves.size(); ++i) {
    b = apply_move(b, moves[i]);
    const int d = *dm.distance(b);
    const int prev = rep.distances.back();
    if (d < prev) rep.nondecreasing = false;
    if (d != prev + 1) {
      rep.geodesic = false;
      if (!rep.first_violation) rep.first_violation = i;
    }
    rep.distances.push_back(d);
  }
  return rep;
}

}  // namespace pegswap
