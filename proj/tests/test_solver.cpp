#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "pegswap/board.hpp"
#include "pegswap/notation.hpp"
#include "pegswap/solver.hpp"

using namespace pegswap;

TEST_CASE("golden solutions") {
  const std::vector<std::string> golden{
      "SjS",
      "SjsJJsjS",
      "SjsJJSjjjSJJsjS",
      "SjsJJSjjjsJJJJsjjjSJJsjS",
      "SjsJJSjjjsJJJJSjjjjjSJJJJsjjjSJJsjS",
  };
  for (int n = 1; n <= 5; ++n) {
    CHECK(format_script(solution_sequence(n)) == golden[static_cast<std::size_t>(n - 1)]);
  }
  CHECK(format_script(solution_sequence(4), true) == "SjsJ2Sj3sJ4sj3SJ2sjS");
}

TEST_CASE("expected counts") {
  const MoveCounts c = expected_counts(7);
  CHECK(c.total == 63);
  CHECK(c.jumps == 49);
  CHECK(c.steps == 14);
  CHECK_FALSE(c.even);
  CHECK(expected_counts(1000000).total == 1000002000000LL);
  CHECK_THROWS_AS(expected_counts(0), PuzzleError);
  CHECK_THROWS_AS(solution_sequence(0), PuzzleError);
}

TEST_CASE("both forms solve and agree for N <= 200") {
  for (int n = 1; n <= 200; ++n) {
    const MoveScript direct = solution_sequence(n, SolutionForm::Direct);
    const MoveScript sym = solution_sequence(n, SolutionForm::Symmetric);
    REQUIRE(direct == sym);
    const SolutionTrace t = replay(n, direct);
    const long long nn = n;
    REQUIRE(t.solved);
    REQUIRE(static_cast<long long>(t.counts.total) == nn * nn + 2 * nn);
    REQUIRE(static_cast<long long>(t.counts.jumps) == nn * nn);
    REQUIRE(static_cast<long long>(t.counts.steps) == 2 * nn);
    REQUIRE(t.final_weight() == 2 * n * (n + 1));
    // Every token is productive, so the weight rises at each move.
    for (std::size_t k = 1; k < t.weight_trace.size(); ++k) {
      REQUIRE(t.weight_trace[k] > t.weight_trace[k - 1]);
    }
  }
}

TEST_CASE("intermediate patterns") {
  CHECK(render_board(intermediate_pattern(5, 2)) == "BORBRBRBRBR");
  CHECK(render_board(intermediate_pattern(2, 1)) == "ORBRB");
  CHECK(render_board(intermediate_pattern(3, 0)) == "BBBORRR");
  CHECK_THROWS_AS(intermediate_pattern(3, 2), PuzzleError);
  CHECK_THROWS_AS(intermediate_pattern(3, -1), PuzzleError);
  CHECK(render_board(mirrored(parse_board("BORBR"))) == "RBROB");
}

TEST_CASE("odd N: prefixes follow the pattern and the middle reverses it") {
  for (int n = 1; n <= 49; n += 2) {
    const int h = (n + 1) / 2;
    for (SolutionForm form : {SolutionForm::Direct, SolutionForm::Symmetric}) {
      const SolutionPlan plan = solution_plan(n, form);
      REQUIRE(plan.first_product.size() == static_cast<std::size_t>(h - 1));
      MoveScript prefix;
      CHECK(replay(n, prefix).final_board() == intermediate_pattern(n, 0));
      for (int m = 1; m <= h - 1; ++m) {
        prefix.append(plan.first_product[static_cast<std::size_t>(m - 1)]);
        REQUIRE(replay(n, prefix).final_board() == intermediate_pattern(n, m));
      }
      prefix.append(plan.middle);
      // R (BR)^{2h-2} O B
      std::string expect = "R";
      for (int i = 0; i < 2 * h - 2; ++i) expect += "BR";
      expect += "OB";
      const Board after = replay(n, prefix).final_board();
      CHECK(render_board(after) == expect);
      CHECK(after == mirrored(intermediate_pattern(n, h - 1)));
    }
  }
}

TEST_CASE("even N: the same pattern holds after each rising term") {
  for (int n = 2; n <= 50; n += 2) {
    const SolutionPlan direct = solution_plan(n, SolutionForm::Direct);
    MoveScript prefix;
    for (std::size_t m = 1; m <= direct.first_product.size(); ++m) {
      prefix.append(direct.first_product[m - 1]);
      if (2 * static_cast<int>(m) > n) break;
      CHECK(replay(n, prefix).final_board() == intermediate_pattern(n, static_cast<int>(m)));
    }

    const SolutionPlan sym = solution_plan(n, SolutionForm::Symmetric);
    prefix = {};
    for (std::size_t m = 1; m <= sym.first_product.size(); ++m) {
      prefix.append(sym.first_product[m - 1]);
      CHECK(replay(n, prefix).final_board() == intermediate_pattern(n, static_cast<int>(m)));
    }
    prefix.append(sym.middle);
    CHECK(replay(n, prefix).final_board() == mirrored(intermediate_pattern(n, n / 2 - 1)));
  }
}

TEST_CASE("solutions read the same backwards") {
  for (int n = 1; n <= 60; ++n) {
    const MoveScript ms = solution_sequence(n);
    CHECK(std::equal(ms.tokens.begin(), ms.tokens.end(), ms.tokens.rbegin()));
  }
}
