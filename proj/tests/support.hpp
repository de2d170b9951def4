#pragma once

// Test-only helpers: brute-force board enumeration and random walks. Nothing
// here goes through the oracle's ranking code.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "pegswap/board.hpp"

namespace pegswap::test {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::size_t below(std::size_t bound) {
    return std::uniform_int_distribution<std::size_t>(0, bound - 1)(engine_);
  }
  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

// Every string over {B, R, O} with n of each color and one hole.
inline std::vector<std::string> all_boards(int n) {
  std::vector<std::string> out;
  std::string cur;
  auto rec = [&](auto&& self, int blue, int red, int hole) -> void {
    if (blue == 0 && red == 0 && hole == 0) {
      out.push_back(cur);
      return;
    }
    for (auto [c, left] : {std::pair{'B', blue}, std::pair{'O', hole}, std::pair{'R', red}}) {
      if (left == 0) continue;
      cur.push_back(c);
      self(self, blue - (c == 'B'), red - (c == 'R'), hole - (c == 'O'));
      cur.pop_back();
    }
  };
  rec(rec, n, n, 1);
  return out;
}

// (2n+1) * C(2n, n)
inline std::uint64_t state_count(int n) {
  std::uint64_t c = 1;
  for (int i = 1; i <= n; ++i) c = c * static_cast<std::uint64_t>(n + i) / static_cast<std::uint64_t>(i);
  return c * static_cast<std::uint64_t>(2 * n + 1);
}

// Uniformly random legal moves from initial_board(n) until the goal is
// reached; nullopt if `cap` moves pass first.
inline std::optional<std::vector<Move>> random_solved_walk(int n, Rng& rng, std::size_t cap) {
  Board b = initial_board(n).without_identities();
  const Board goal = goal_board(n);
  std::vector<Move> path;
  while (path.size() < cap) {
    auto moves = legal_moves(b);
    const Move m = moves[rng.below(moves.size())];
    b = apply_move(b, m);
    path.push_back(m);
    if (b == goal) return path;
  }
  return std::nullopt;
}

// Random legal walk of exactly `length` moves.
inline std::vector<Move> random_walk(int n, Rng& rng, std::size_t length) {
  Board b = initial_board(n).without_identities();
  std::vector<Move> path;
  for (std::size_t i = 0; i < length; ++i) {
    auto moves = legal_moves(b);
    const Move m = moves[rng.below(moves.size())];
    b = apply_move(b, m);
    path.push_back(m);
  }
  return path;
}

}  // namespace pegswap::test
