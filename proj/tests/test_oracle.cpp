#include <doctest.h>

#include <cstdlib>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "pegswap/board.hpp"
#include "pegswap/notation.hpp"
#include "pegswap/oracle.hpp"
#include "pegswap/solver.hpp"
#include "support.hpp"

using namespace pegswap;

namespace {

// Plain BFS over rendered board strings. Shares only legal_moves/apply_move
// with the library, none of the packing, ranking or depth bookkeeping.
std::map<std::string, int> string_bfs(int n) {
  std::map<std::string, int> dist;
  std::deque<Board> queue{initial_board(n).without_identities()};
  dist[render_board(queue.front())] = 0;
  while (!queue.empty()) {
    const Board b = queue.front();
    queue.pop_front();
    const int d = dist[render_board(b)];
    for (const Move& m : legal_moves(b)) {
      const Board next = apply_move(b, m);
      if (dist.emplace(render_board(next), d + 1).second) queue.push_back(next);
    }
  }
  return dist;
}

}  // namespace

TEST_CASE("encode and decode") {
  CHECK(render_board(decode_state(encode_state(initial_board(2)), 2)) == "BBORR");
  for (int n = 1; n <= 3; ++n) {
    std::set<PackedState> seen;
    for (const std::string& text : test::all_boards(n)) {
      const Board b = parse_board(text, n);
      const PackedState p = encode_state(b);
      CHECK(seen.insert(p).second);
      CHECK(decode_state(p, n) == b);
      CHECK(encode_state(decode_state(p, n)) == p);
    }
    // Every other word with the same width is rejected.
    const int cells = 2 * n + 1;
    std::size_t valid = 0;
    for (PackedState e = 0; e < static_cast<PackedState>(cells + 2); ++e) {
      for (PackedState mask = 0; mask < (PackedState{1} << cells); ++mask) {
        const PackedState p = (e << cells) | mask;
        if (seen.count(p)) {
          ++valid;
        } else {
          CHECK_THROWS_AS(decode_state(p, n), BoardFormatError);
        }
      }
    }
    CHECK(valid == seen.size());
  }
  // One red bit too many.
  const PackedState bad = (PackedState{2} << 5) | 0b11011;
  CHECK_THROWS_AS(decode_state(bad, 2), BoardFormatError);
}

TEST_CASE("state indexer is a bijection") {
  for (int n = 1; n <= 5; ++n) {
    const StateIndexer idx(n);
    CHECK(idx.size() == test::state_count(n));
    for (std::uint64_t r = 0; r < idx.size(); ++r) {
      const PackedState p = idx.unrank(r);
      REQUIRE(idx.rank(p) == r);
      REQUIRE(encode_state(decode_state(p, n)) == p);
    }
  }
}

TEST_CASE("minimum moves") {
  CHECK(*bfs_min_moves(1).min_moves == 3);
  CHECK(*bfs_min_moves(3).min_moves == 15);
  const SearchResult r = bfs_min_moves(2, true);
  REQUIRE(r.min_moves);
  CHECK(*r.min_moves == 8);
  REQUIRE(r.witness.size() == 8);
  const SolutionTrace t = replay(2, r.witness);
  CHECK(t.solved);
  CHECK(render_board(t.final_board()) == "RROBB");
}

TEST_CASE("search agrees with a string-keyed BFS") {
  for (int n = 1; n <= 4; ++n) {
    const auto dist = string_bfs(n);
    const SearchResult r = bfs_min_moves(n, true);
    CHECK(r.reachable_states == dist.size());
    CHECK(*r.min_moves == dist.at(render_board(goal_board(n))));
    CHECK(replay(n, r.witness).solved);

    const DistanceMap dm = distance_map(n);
    for (const auto& [text, d] : dist) CHECK(dm.distance(parse_board(text, n)) == d);

    const ReachableSet set = enumerate_reachable(n);
    CHECK(set.count() == dist.size());
    CHECK(set.contains(goal_board(n)));
    for (const Board& b : set.boards()) CHECK(dist.count(render_board(b)) == 1);
  }
}

TEST_CASE("reachable states for n = 2") {
  // Every placement is reachable for small n.
  CHECK(bfs_min_moves(2).reachable_states == 30);
  CHECK(enumerate_reachable(2).count() == 30);
}

TEST_CASE("storage and workers do not change the result") {
  for (int n = 1; n <= 7; ++n) {
    SearchConfig base;
    base.storage = StateStorage::RankTable;
    const SearchResult ref = bfs_min_moves(n, true, base);
    CHECK(*ref.min_moves == n * n + 2 * n);
    for (int workers : {1, 2, 4, 8}) {
      for (StateStorage s : {StateStorage::RankTable, StateStorage::HashSet}) {
        SearchConfig c;
        c.workers = workers;
        c.storage = s;
        const SearchResult r = bfs_min_moves(n, true, c);
        CHECK(r.min_moves == ref.min_moves);
        CHECK(r.reachable_states == ref.reachable_states);
        CHECK(r.peak_frontier == ref.peak_frontier);
        CHECK(r.max_depth == ref.max_depth);
        CHECK(r.witness == ref.witness);
      }
    }
    CHECK(bidirectional_min_moves(n) == ref.min_moves);
  }
}

TEST_CASE("feasibility bounds are enforced") {
  SearchConfig small;
  small.max_n = 4;
  CHECK_THROWS_AS(bfs_min_moves(5, false, small), FeasibilityError);
  CHECK_THROWS_AS(enumerate_reachable(5, small), FeasibilityError);
  SearchConfig tight;
  tight.memory_budget_bytes = 1024;
  CHECK_THROWS_AS(bfs_min_moves(8, false, tight), FeasibilityError);
  CHECK_THROWS_AS(bfs_min_moves(13), FeasibilityError);
  CHECK_THROWS_AS(max_increasing_jump_run(6), FeasibilityError);
  CHECK(estimated_search_bytes(10) < estimated_search_bytes(11));
}

TEST_CASE("weight changes by at most 2 along every edge") {
  for (int n = 1; n <= 4; ++n) {
    for (const Board& b : enumerate_reachable(n).boards()) {
      for (const Move& m : legal_moves(b)) {
        const int d = weight(apply_move(b, m)) - weight(b);
        CHECK(std::abs(d) <= 2);
        CHECK(d != 0);
      }
    }
  }
}

TEST_CASE("consecutive increasing jumps") {
  CHECK(max_increasing_jump_run(1) == 1);
  CHECK(max_increasing_jump_run(2) == 2);
  for (int n = 1; n <= 4; ++n) CHECK(max_increasing_jump_run(n) <= n);
}

TEST_CASE("closed-form solutions along the distance map") {
  // Report only: the solution need not be geodesic move by move.
  for (int n = 1; n <= 6; ++n) {
    const SolutionTrace t = replay(n, solution_sequence(n));
    const GeodesicReport g = check_geodesic(n, t.moves);
    REQUIRE(g.distances.size() == t.moves.size() + 1);
    CHECK(g.distances.front() == 0);
    CHECK(g.distances.back() == n * n + 2 * n);
    MESSAGE("n=" << n << " geodesic=" << std::string(g.geodesic ? "yes" : "no")
                  << " nondecreasing=" << std::string(g.nondecreasing ? "yes" : "no"));
  }
}
