#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "pegswap/board.hpp"
#include "support.hpp"

using namespace pegswap;

TEST_CASE("initial and goal boards") {
  CHECK(render_board(initial_board(1)) == "BOR");
  CHECK(render_board(initial_board(2)) == "BBORR");
  CHECK(render_board(initial_board(5)) == "BBBBBORRRRR");
  CHECK(render_board(goal_board(1)) == "ROB");
  CHECK(render_board(goal_board(2)) == "RROBB");
  CHECK(render_board(goal_board(3)) == "RRROBBB");
  CHECK_THROWS_AS(initial_board(0), PuzzleError);
  CHECK_THROWS_AS(goal_board(-1), PuzzleError);
}

TEST_CASE("initial board numbers pegs left to right") {
  const Board b = initial_board(3);
  REQUIRE(b.has_identities());
  CHECK(*b.peg_at(0) == PegId{Color::Blue, 1});
  CHECK(*b.peg_at(2) == PegId{Color::Blue, 3});
  CHECK_FALSE(b.peg_at(3).has_value());
  CHECK(*b.peg_at(4) == PegId{Color::Red, 1});
  CHECK(*b.peg_at(6) == PegId{Color::Red, 3});
  CHECK(b.position_of({Color::Red, 2}) == 5);
}

TEST_CASE("parse and render") {
  const Board b = parse_board("BOBRR", 2);
  CHECK(b.empty_index() == 1);
  CHECK(render_board(b) == "BOBRR");
  CHECK(render_board(initial_board(3)) == "BBBORRR");
  CHECK_THROWS_AS(parse_board("BBRR", 2), BoardFormatError);
  CHECK_THROWS_AS(parse_board("BBXRR", 2), BoardFormatError);
  CHECK_THROWS_AS(parse_board("BBBRR", 2), BoardFormatError);  // no hole
  CHECK_THROWS_AS(parse_board("BOORR", 2), BoardFormatError);  // two holes
  CHECK_THROWS_AS(parse_board("BORRR", 2), BoardFormatError);  // wrong color counts
  CHECK(render_board(parse_board("RBROB")) == "RBROB");
}

TEST_CASE("identities must be a bijection") {
  const Board b = parse_board("BBORR");
  const std::vector<int> good{2, 1, 0, 1, 2};
  CHECK(*b.with_identities(good).peg_at(0) == PegId{Color::Blue, 2});
  const std::vector<int> dup{1, 1, 0, 1, 2};
  CHECK_THROWS_AS(b.with_identities(dup), BoardFormatError);
  const std::vector<int> hole{1, 2, 1, 1, 2};
  CHECK_THROWS_AS(b.with_identities(hole), BoardFormatError);
}

TEST_CASE("legal moves") {
  auto moves = legal_moves(parse_board("BOR"));
  REQUIRE(moves.size() == 2);
  CHECK(moves[0] == Move{MoveKind::Step, 0, 1, Color::Blue});
  CHECK(moves[1] == Move{MoveKind::Step, 2, 1, Color::Red});

  moves = legal_moves(parse_board("BBORR"));
  REQUIRE(moves.size() == 4);
  CHECK(moves[0] == Move{MoveKind::Jump, 0, 2, Color::Blue});
  CHECK(moves[1] == Move{MoveKind::Step, 1, 2, Color::Blue});
  CHECK(moves[2] == Move{MoveKind::Step, 3, 2, Color::Red});
  CHECK(moves[3] == Move{MoveKind::Jump, 4, 2, Color::Red});

  moves = legal_moves(parse_board("OBR"));
  REQUIRE(moves.size() == 2);
  CHECK(moves[0] == Move{MoveKind::Step, 1, 0, Color::Blue});
  CHECK(moves[1] == Move{MoveKind::Jump, 2, 0, Color::Red});
}

TEST_CASE("apply_move") {
  const Board b = apply_move(parse_board("BBORR"), {MoveKind::Step, 1, 2, Color::Blue});
  CHECK(render_board(b) == "BOBRR");
  const Board c = apply_move(b, {MoveKind::Jump, 3, 1, Color::Red});
  CHECK(render_board(c) == "BRBOR");
  CHECK_THROWS_AS(apply_move(parse_board("BOR"), {MoveKind::Jump, 2, 0, Color::Red}), IllegalMove);
  CHECK_THROWS_AS(apply_move(parse_board("BOR"), {MoveKind::Step, 0, 1, Color::Red}), IllegalMove);
  CHECK_THROWS_AS(apply_move(parse_board("BBORR"), {MoveKind::Step, 0, 1, Color::Blue}),
                  IllegalMove);
  CHECK_THROWS_AS(apply_move(parse_board("BBORR"), {MoveKind::Jump, 1, 2, Color::Blue}),
                  IllegalMove);
}

TEST_CASE("apply_move carries identities") {
  const Board b = apply_move(initial_board(2), {MoveKind::Jump, 4, 2, Color::Red});
  CHECK(render_board(b) == "BBRRO");
  CHECK(*b.peg_at(2) == PegId{Color::Red, 2});
  CHECK(*b.peg_at(3) == PegId{Color::Red, 1});
}

TEST_CASE("weight") {
  for (int n = 1; n <= 8; ++n) {
    CHECK(weight(initial_board(n)) == 0);
    CHECK(weight(goal_board(n)) == 2 * n * (n + 1));
  }
  CHECK(weight(goal_board(2)) == 12);
  CHECK(weight(parse_board("BOBRR")) == 1);
}

TEST_CASE("weight deltas") {
  CHECK(move_weight_delta(parse_board("BBORR"), {MoveKind::Step, 1, 2, Color::Blue}) == 1);
  CHECK(move_weight_delta(parse_board("BOBRR"), {MoveKind::Jump, 3, 1, Color::Red}) == 2);
  CHECK(move_weight_delta(parse_board("BOBRR"), {MoveKind::Step, 2, 1, Color::Blue}) == -1);
  CHECK(move_weight_delta(parse_board("OBBRR"), {MoveKind::Jump, 2, 0, Color::Blue}) == -2);
  CHECK_THROWS_AS(move_weight_delta(parse_board("BOR"), {MoveKind::Jump, 2, 0, Color::Red}),
                  IllegalMove);
}

// The identity-based weight: each peg's displacement in its productive
// direction, summed. Independent of the positional formula in the library.
int identity_weight(const Board& b) {
  const Board start = initial_board(b.n());
  int w = 0;
  for (int i = 0; i < b.size(); ++i) {
    auto id = b.peg_at(i);
    if (!id) continue;
    const int from = start.position_of(*id);
    w += id->color == Color::Blue ? i - from : from - i;
  }
  return w;
}

TEST_CASE("positional and identity weights agree along random walks") {
  test::Rng rng(7);
  for (int n = 1; n <= 5; ++n) {
    Board b = initial_board(n);
    for (int step = 0; step < 2000; ++step) {
      auto moves = legal_moves(b);
      b = apply_move(b, moves[rng.below(moves.size())]);
      REQUIRE(weight(b) == identity_weight(b));
    }
  }
}

TEST_CASE("exhaustive board properties for n <= 3") {
  for (int n = 1; n <= 3; ++n) {
    const auto boards = test::all_boards(n);
    CHECK(boards.size() == static_cast<std::size_t>(test::state_count(n)));
    for (const std::string& text : boards) {
      const Board b = parse_board(text, n);
      CHECK(render_board(b) == text);
      CHECK(parse_board(render_board(b), n) == b);

      const auto moves = legal_moves(b);
      CHECK(moves.size() >= 1);
      CHECK(moves.size() <= 4);
      CHECK(std::is_sorted(moves.begin(), moves.end(),
                           [](const Move& x, const Move& y) { return x.from < y.from; }));
      for (const Move& m : moves) {
        const Board next = apply_move(b, m);  // Board ctor enforces the invariants
        CHECK(next.empty_index() == m.from);
        const int d = move_weight_delta(b, m);
        CHECK(weight(next) - weight(b) == d);
        CHECK((d == -2 || d == -1 || d == 1 || d == 2));
        CHECK(std::abs(d) == (m.kind == MoveKind::Step ? 1 : 2));
        const Move back = reverse_move(m);
        CHECK(back.kind == m.kind);
        CHECK(apply_move(next, back) == b);
      }
    }
  }
}
