#pragma once

#include <vector>

#include "pegswap/board.hpp"
#include "pegswap/notation.hpp"

namespace pegswap {

// Two bracketings of the same optimal token sequence. Direct follows the
// per-parity product formulas; Symmetric regroups them around a central
// palindromic segment with a descending second product.
enum class SolutionForm { Direct, Symmetric };

// The optimal solution split at its product-term boundaries:
//   first_product terms, then `middle`, then second_product terms.
// `middle` is empty for the Direct form with even N.
struct SolutionPlan {
  int n = 0;
  SolutionForm form = SolutionForm::Direct;
  std::vector<MoveScript> first_product;
  MoveScript middle;
  std::vector<MoveScript> second_product;

  MoveScript flatten() const;
};

SolutionPlan solution_plan(int n, SolutionForm form);
// N^2 + 2N tokens that take initial_board(n) to goal_board(n).
MoveScript solution_sequence(int n, SolutionForm form = SolutionForm::Direct);

struct MoveCounts {
  long long total = 0;
  long long jumps = 0;
  long long steps = 0;
  // N = 2 * half_index for even N, N = 2 * half_index - 1 for odd N.
  int half_index = 0;
  bool even = false;
};

MoveCounts expected_counts(int n);

// B^(N-2m) O (RB)^(2m) R^(N-2m): the board after m terms of the first
// product. Requires 0 <= 2m <= N.
Board intermediate_pattern(int n, int m);
// Left-right reversal of a board (reds and blues keep their colors).
Board mirrored(const Board& b);

}  // namespace pegswap
