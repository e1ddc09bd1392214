#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "projcb/construct.hpp"

using namespace projcb;

TEST_CASE("all-north lower-target paths") {
  Construction c43 = construct_ha(Board(4, 3), 1);
  CHECK(c43.walk.start == Square{0, 2});
  CHECK(c43.walk.moves.str() == "NNNNNENNNNN");
  CHECK(final_square(c43.walk) == Square{1, 0});

  Construction c33 = construct_ha(Board(3, 3), 1);
  CHECK(c33.walk.moves.str() == "NNNNNENN");
  CHECK(final_square(c33.walk) == Square{1, 0});

  Construction c53 = construct_ha(Board(5, 3), 2);
  CHECK(c53.walk.start == Square{4, 0});
  CHECK(final_square(c53.walk) == Square{2, 0});
  CHECK(c53.walk.moves.size() == 14);
  CHECK(east_set(c53.walk).empty());

  CHECK_THROWS_AS(construct_ha(Board(4, 3), 0), HypothesisViolation);
  CHECK_THROWS_AS(construct_ha(Board(3, 2), 1), HypothesisViolation);
}

TEST_CASE("all-north upper-target paths") {
  Construction c43 = construct_hb(Board(4, 3), 1, 3);
  CHECK(c43.walk.start == Square{0, 2});
  CHECK(final_square(c43.walk) == Square{2, 1});
  CHECK(east_set(c43.walk).empty());
  // even-width printed formula validates here
  CHECK(c43.log.literal == ConstructionLog::Literal::Pass);
  CHECK(c43.log.source == ConstructionLog::Source::Formula);

  Construction c53 = construct_hb(Board(5, 3), 2, 3);
  CHECK(c53.walk.start == Square{4, 0});
  CHECK(final_square(c53.walk) == Square{2, 1});
  CHECK(east_set(c53.walk).empty());
  // the printed odd-width sequence is 11 moves, 14 required: decoder route
  CHECK(c53.log.literal == ConstructionLog::Literal::Fail);
  CHECK(c53.log.source == ConstructionLog::Source::Decoder);

  CHECK_THROWS_AS(construct_hb(Board(3, 3), 1, 1), HypothesisViolation);
  // b = 5 puts the target square off the board (b > mf + n - 1 = 4)
  CHECK_THROWS_AS(construct_hb(Board(5, 3), 0, 5), HypothesisViolation);
}

TEST_CASE("exceptional-board paths") {
  Construction c5 = construct_exceptional(5);
  CHECK(c5.walk.start == Square{3, 0});
  CHECK(final_square(c5.walk) == Square{1, 1});
  CHECK(east_set(c5.walk).empty());

  Construction c6 = construct_exceptional(6);
  CHECK(c6.walk.start == Square{4, 0});
  CHECK(final_square(c6.walk) == Square{2, 1});
  CHECK(east_set(c6.walk).empty());

  CHECK_THROWS_AS(construct_exceptional(4), HypothesisViolation);
}

TEST_CASE("single-row paths") {
  Construction c = construct_n1(5, 3);
  CHECK(final_square(c.walk) == Square{2, 0});
  CHECK(construct_n1(5, 0).walk.moves.str() == "EEEE");
  CHECK(final_square(construct_n1(5, 0).walk) == Square{4, 0});
  Construction one = construct_n1(1, 0);
  CHECK(one.walk.moves.empty());
  CHECK_THROWS_AS(construct_n1(5, 5), HypothesisViolation);
}

TEST_CASE("two-row paths") {
  Construction a = construct_n2(3, N2Row::A, {1, 0});
  CHECK(a.walk.start == Square{1, 0});
  CHECK(final_square(a.walk) == Square{0, 0});

  Construction b = construct_n2(4, N2Row::B);
  CHECK(b.walk.start == Square{0, 1});
  CHECK(final_square(b.walk) == Square{0, 0});

  Construction d = construct_n2(5, N2Row::D);
  CHECK(d.walk.start == Square{4, 1});
  CHECK(final_square(d.walk) == Square{4, 0});

  // row a with target on the singleton square takes the search fallback
  Construction corner = construct_n2(4, N2Row::A, {0, 0});
  CHECK(final_square(corner.walk) == Square{3, 1});

  CHECK_THROWS_AS(construct_n2(4, N2Row::F), HypothesisViolation);
  CHECK_THROWS_AS(construct_n2(5, N2Row::J, {3, -1}), HypothesisViolation);
}

TEST_CASE("canonical construction is the decoder") {
  Board b(3, 3);
  auto w = construct_canonical(b, PathSpec{{0, 2}, {1, 0}, {}});
  REQUIRE(w.has_value());
  CHECK(w->moves.str() == "NNNNNENN");
  CHECK_THROWS_AS(construct_canonical(b, PathSpec{{0, 0}, {1, 0}, {}}),
                  InvalidSpec);
  // from (2,0) only (0,1) and (1,1) are reachable, never (1,0)
  CHECK_FALSE(
      construct_canonical(b, PathSpec{{2, 0}, {1, 0}, {}}).has_value());
}

TEST_CASE("constructed walks always validate across the small range") {
  for (int m = 3; m <= 8; ++m)
    for (int n = 3; n <= m; ++n) {
      Board b(m, n);
      const int top = m + n - 3;
      for (int a = 0; 2 * a <= top; ++a) {
        int upper = top - a;
        bool straddles = a <= m - 2 && m - 2 <= upper;
        if (straddles && a >= b.mf_minus) {
          Walk w = construct_ha(b, a).walk;
          CHECK(is_hamiltonian_path(w));
          CHECK(w.start == b.east(southeast_most(b, upper)));
          CHECK(final_square(w) == Square{b.mf_minus, a - b.mf_minus});
          CHECK(east_set(w).empty());
        }
        if (straddles && a != upper && upper <= b.mf + n - 1) {
          Walk w = construct_hb(b, a, upper).walk;
          CHECK(is_hamiltonian_path(w));
          CHECK(final_square(w) == Square{b.mf, upper - b.mf});
          CHECK(east_set(w).empty());
        }
      }
    }
}
