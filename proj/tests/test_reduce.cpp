#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "projcb/construct.hpp"
#include "projcb/reduce.hpp"

using namespace projcb;

TEST_CASE("delta counts") {
  DeltaMap dm(2, 4);
  CHECK(dm(3) == 1);
  CHECK(dm(0) == 0);
  CHECK(dm(7) == 2);
  DeltaMap self(3, 3);
  CHECK(self(3) == 0);
  CHECK(self(4) == 1);
  CHECK(self(9) == 1);
  CHECK_THROWS_AS(DeltaMap(4, 2), HypothesisViolation);
}

TEST_CASE("delta square relabeling") {
  DeltaMap dm(2, 4);
  CHECK(dm.apply({3, 2}) == Square{1, 2});
  CHECK(dm.apply({1, 0}) == Square{1, 0});
  CHECK(dm.apply({3, 0}) == Square{2, 0});
  CHECK_THROWS_AS(dm.apply({1, 1}), HypothesisViolation);
  CHECK_THROWS_AS(dm.apply({2, 2}), HypothesisViolation);
}

TEST_CASE("delta relabeling inverts off the removed subdiagonals") {
  for (auto [i, j] : {std::pair{2, 4}, {3, 3}, {2, 3}, {0, 1}}) {
    DeltaMap dm(i, j);
    for (int p = 0; p < 9; ++p)
      for (int q = 0; q < 9; ++q) {
        Square s{p, q};
        if (p + q == i || p + q == j) continue;
        CHECK(dm.unapply(dm.apply(s)) == s);
      }
  }
}

namespace {

// First enumerated 6x3 path whose east-set contains the self-paired rowful
// diagonal S_3.
Walk rowful_east_63() {
  Board b(6, 3);
  Diagonals dt(b);
  for (const PathRecord& rec : cached_enumeration(b).paths)
    if (rec.spec && rec.spec->east.count(3) &&
        rowful(b, dt.at(3)))
      return rec.walk;
  throw Error("no 6x3 path sends S_3 east");
}

}  // namespace

TEST_CASE("contraction to a narrower board") {
  Walk w = rowful_east_63();
  Walk narrow = contract_rowful_east(w, 3);
  CHECK(narrow.board.m == 5);
  CHECK(narrow.board.n == 3);
  CHECK(is_hamiltonian_path(narrow));

  // directions survive the relabeling
  TravelMap tm = travel_map(w), tm2 = travel_map(narrow);
  DeltaMap dm(3, 3);
  for (int idx = 0; idx < w.board.size(); ++idx) {
    Square s = w.board.square_at(idx);
    if (s.p + s.q == 3 || s == tm.terminal()) continue;
    CHECK(tm2.at(dm.apply(s)) == tm.at(s));
  }

  // splicing the diagonal back restores the original walk
  CHECK(expand_rowful_east(narrow, 3, 3) == w);
}

TEST_CASE("expansion inserts an east diagonal") {
  Board b(5, 3);
  Walk base = construct_ha(b, 2).walk;
  Walk wide = expand_rowful_east(base, 3, 3);
  CHECK(wide.board.m == 6);
  CHECK(is_hamiltonian_path(wide));
  CHECK(east_set(wide).count(3));
  CHECK(contract_rowful_east(wide, 3) == base);

  CHECK_THROWS_AS(expand_rowful_east(base, 1, 5), HypothesisViolation);
}

TEST_CASE("contraction preconditions") {
  Board b(6, 3);
  Walk w = rowful_east_63();
  // terminal diagonal and non-east diagonals are rejected
  Diagonals dt(b);
  int term_id = dt.id_of(final_square(w));
  CHECK_THROWS_AS(contract_rowful_east(w, term_id), HypothesisViolation);
  Walk all_north = construct_ha(b, 2).walk;
  CHECK_THROWS_AS(contract_rowful_east(all_north, 3), HypothesisViolation);
  CHECK_THROWS_AS(contract_rowful_east(w, 0), HypothesisViolation);
}

TEST_CASE("stretch parameters") {
  Board b83(8, 3);  // diagonal pairing (2, 6)
  StretchParams sp = stretch_params(b83, 2, 6, {3, 0}, {6, 0}, 2);
  CHECK(sp.o == 0);
  CHECK(sp.e1 == 0);
  CHECK(sp.e2 == 2);
  CHECK(sp.m_prime == 6);
  CHECK(sp.a_prime == 2);
  CHECK(sp.b_prime == 4);
  CHECK(sp.p_prime == 3);
  CHECK(sp.x_prime == 4);

  StretchParams zero = stretch_params(b83, 2, 6, {3, 0}, {2, 0}, 0);
  CHECK(zero.m_prime == b83.m - 2 * zero.o);

  Board b93(9, 3);  // a = 3 >= n gives one rowful outer diagonal
  StretchParams tall = stretch_params(b93, 3, 6, {4, 0}, {3, 0}, 0);
  CHECK(tall.o == 1);

  CHECK_THROWS_AS(stretch_params(b83, 2, 6, {0, 0}, {6, 0}, 0),
                  HypothesisViolation);
  CHECK_THROWS_AS(stretch_params(b83, 2, 5, {3, 0}, {2, 0}, 0),
                  HypothesisViolation);
}

TEST_CASE("stretch correspondence on a small board") {
  Board b(5, 3);
  Diagonals dt(b);
  // realized triples answer true; bound and parity violations answer false
  int realized = 0, total = 0;
  for (const PathRecord& rec : cached_enumeration(b).paths) {
    if (!rec.spec) continue;
    int e = rowful_inner_east_count(rec.walk, dt);
    CHECK(verify_stretch(b, rec.walk.start, rec.spec->terminal, e));
    ++realized;
  }
  CHECK(realized > 0);

  for (Square tau : dt.at(2).orbit)
    for (Square init : subdiagonal(b, 3)) {
      // bound for the (2,3) terminal diagonal is min(m-n, b-a-1) = 0
      CHECK_FALSE(verify_stretch(b, init, tau, 1));
      ++total;
    }
  CHECK(total > 0);

  // even m+n forces even e: on 6x4 the (2,5) diagonal admits e up to 2,
  // but never e = 1
  Board b64(6, 4);
  Diagonals dt64(b64);
  for (Square tau : dt64.at(2).orbit)
    for (Square init : subdiagonal(b64, 3))
      CHECK_FALSE(verify_stretch(b64, init, tau, 1));
}
