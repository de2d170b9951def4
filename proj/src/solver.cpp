#include "pegswap/solver.hpp"

#include <algorithm>
#include <string>

namespace pegswap {

namespace {

// One factor of a product: a list of (token, power) pairs.
MoveScript term(std::initializer_list<std::pair<Token, int>> factors) {
  MoveScript out;
  for (auto [t, power] : factors) {
    if (power > 0) out.append(t, static_cast<std::size_t>(power));
  }
  return out;
}

// S j^(2k-1) s J^(2k)
MoveScript rising_term(int k) {
  return term({{Token::S, 1}, {Token::j, 2 * k - 1}, {Token::s, 1}, {Token::J, 2 * k}});
}

// J^(2k) s j^(2k-1) S
MoveScript falling_term(int k) {
  return term({{Token::J, 2 * k}, {Token::s, 1}, {Token::j, 2 * k - 1}, {Token::S, 1}});
}

}  // namespace

MoveScript SolutionPlan::flatten() const {
  MoveScript out;
  for (const auto& t : first_product) out.append(t);
  out.append(middle);
  for (const auto& t : second_product) out.append(t);
  return out;
}

SolutionPlan solution_plan(int n, SolutionForm form) {
  if (n < 1) throw PuzzleError("N must be at least 1, got " + std::to_string(n));
  SolutionPlan plan;
  plan.n = n;
  plan.form = form;
  const bool even = n % 2 == 0;
  const int h = even ? n / 2 : (n + 1) / 2;

  if (form == SolutionForm::Direct) {
    if (even) {
      for (int k = 1; k <= h; ++k) plan.first_product.push_back(rising_term(k));
      for (int k = 1; k <= h; ++k) {
        plan.second_product.push_back(term({{Token::s, 1},
                                            {Token::j, 2 * h - 2 * k + 1},
                                            {Token::S, 1},
                                            {Token::J, 2 * h - 2 * k}}));
      }
    } else {
      for (int k = 1; k <= h - 1; ++k) plan.first_product.push_back(rising_term(k));
      plan.middle = term({{Token::S, 1}, {Token::j, 2 * h - 1}, {Token::S, 1}});
      for (int k = 1; k <= h - 1; ++k) {
        plan.second_product.push_back(term({{Token::J, 2 * h - 2 * k},
                                            {Token::s, 1},
                                            {Token::j, 2 * h - 2 * k - 1},
                                            {Token::S, 1}}));
      }
    }
    return plan;
  }

  for (int k = 1; k <= h - 1; ++k) plan.first_product.push_back(rising_term(k));
  if (even) {
    plan.middle = term({{Token::S, 1},
                        {Token::j, 2 * h - 1},
                        {Token::s, 1},
                        {Token::J, 2 * h},
                        {Token::s, 1},
                        {Token::j, 2 * h - 1},
                        {Token::S, 1}});
  } else {
    plan.middle = term({{Token::S, 1}, {Token::j, 2 * h - 1}, {Token::S, 1}});
  }
  for (int k = h - 1; k >= 1; --k) plan.second_product.push_back(falling_term(k));
  return plan;
}

MoveScript solution_sequence(int n, SolutionForm form) { return solution_plan(n, form).flatten(); }

MoveCounts expected_counts(int n) {
  if (n < 1) throw PuzzleError("N must be at least 1, got " + std::to_string(n));
  MoveCounts c;
  const long long big = n;
  c.jumps = big * big;
  c.steps = 2 * big;
  c.total = c.jumps + c.steps;
  c.even = n % 2 == 0;
  c.half_index = c.even ? n / 2 : (n + 1) / 2;
  return c;
}

Board intermediate_pattern(int n, int m) {
  if (n < 1) throw PuzzleError("N must be at least 1, got " + std::to_string(n));
  if (m < 0 || 2 * m > n) {
    throw PuzzleError("pattern index m=" + std::to_string(m) + " out of range for N=" +
                      std::to_string(n));
  }
  std::string text(static_cast<std::size_t>(n - 2 * m), 'B');
  text.push_back('O');
  for (int i = 0; i < 2 * m; ++i) text += "RB";
  text.append(static_cast<std::size_t>(n - 2 * m), 'R');
  return parse_board(text, n);
}

Board mirrored(const Board& b) {
  std::vector<Cell> cells(b.cells().begin(), b.cells().end());
  std::reverse(cells.begin(), cells.end());
  return Board(b.n(), std::move(cells));
}

}  // namespace pegswap
