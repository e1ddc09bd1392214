#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "projcb/decode.hpp"
#include "projcb/endpoints.hpp"

using namespace projcb;

namespace {

bool has_clause(const PredicateResult& r, const std::string& label) {
  return std::find(r.clauses.begin(), r.clauses.end(), label) !=
         r.clauses.end();
}

}  // namespace

TEST_CASE("initial-square predicate on 3x3") {
  Board b(3, 3);
  CHECK_FALSE(initial_square(b, {0, 0}).matched);
  auto center = initial_square(b, {1, 1});
  CHECK(center.matched);
  CHECK(has_clause(center, "init:4"));
  CHECK(has_clause(center, "init:6"));
  CHECK_FALSE(initial_square(b, {2, 2}).matched);
  CHECK_THROWS_AS(initial_square(Board(3, 4), {0, 0}), HypothesisViolation);
}

TEST_CASE("terminal-square predicate on 3x3") {
  Board b(3, 3);
  CHECK_FALSE(terminal_square(b, {0, 0}).matched);
  auto east_edge = terminal_square(b, {2, 0});
  CHECK(east_edge.matched);
  CHECK(has_clause(east_edge, "term:1"));
  CHECK_FALSE(terminal_square(b, {2, 2}).matched);
}

TEST_CASE("rotation duality across boards") {
  for (int m = 3; m <= 12; ++m)
    for (int n = 3; n <= m; ++n) {
      Board b(m, n);
      for (int q = 0; q < n; ++q)
        for (int p = 0; p < m; ++p) {
          Square s{p, q};
          CHECK(terminal_square(b, s).matched ==
                initial_square(b, b.rotated(s)).matched);
        }
    }
}

TEST_CASE("southeast-corner east images") {
  CHECK(tau_plus_e_form(Board(4, 3)) ==
        std::set<Square>{{0, 1}, {0, 2}, {3, 0}});
  CHECK(tau_plus_e_form(Board(3, 3)) == std::set<Square>{{0, 1}, {0, 2}});

  // cross-check against a direct sweep over all upper subdiagonals
  for (int m = 3; m <= 10; ++m)
    for (int n = 3; n <= m; ++n) {
      Board b(m, n);
      std::set<Square> direct;
      const int top = m + n - 3;
      for (int a = 0; 2 * a <= top; ++a)
        direct.insert(b.east(southeast_most(b, top - a)));
      CHECK(direct == tau_plus_e_form(b));
    }
}

TEST_CASE("terminals for column-edge starts") {
  Board b(3, 3);
  CHECK(endpoints_from_0q(b, 2) == std::set<Square>{{1, 0}, {1, 1}});
  CHECK(endpoints_from_0q(b, 1) == std::set<Square>{{1, 2}});
  CHECK_THROWS_AS(endpoints_from_0q(b, 0), HypothesisViolation);
  CHECK_THROWS_AS(endpoints_from_0q(b, 3), HypothesisViolation);
}

TEST_CASE("terminals for row-edge starts, near half") {
  // clause 1 pins the row to nf_minus; confirmed against the enumeration
  Board b43(4, 3);
  CHECK(endpoints_from_p0_small(b43, 2) == std::set<Square>{{0, 1}, {2, 1}});
  Board b53(5, 3);
  CHECK(endpoints_from_p0_small(b53, 1) == std::set<Square>{{4, 1}});
  CHECK_THROWS_AS(endpoints_from_p0_small(b43, 0), HypothesisViolation);
}

TEST_CASE("terminals for row-edge starts, far half") {
  Board b43(4, 3);
  CHECK(endpoints_from_p0_large(b43, 3) == std::set<Square>{{1, 1}});
  Board b53(5, 3);
  CHECK(endpoints_from_p0_large(b53, 4) == std::set<Square>{{2, 0}, {2, 1}});
  CHECK_THROWS_AS(endpoints_from_p0_large(b53, 3), HypothesisViolation);
  CHECK_THROWS_AS(endpoints_from_p0_large(Board(4, 4), 3),
                  HypothesisViolation);
}

TEST_CASE("admissible pairs match the exhaustive enumeration") {
  for (auto [m, n] : {std::pair{3, 3}, {4, 3}, {5, 4}}) {
    Board b(m, n);
    const EnumerationReport& rep = cached_enumeration(b);
    auto pairs = admissible_pairs(b);
    CHECK(pairs == rep.endpoint_pairs);

    std::set<Square> inits, terms;
    for (const auto& [i, t] : pairs) {
      inits.insert(i);
      terms.insert(t);
    }
    CHECK(inits == rep.initials);
    CHECK(terms == rep.terminals);
    for (Square s : inits) CHECK(initial_square(b, s).matched);
    for (Square s : terms) CHECK(terminal_square(b, s).matched);
  }
}

TEST_CASE("two-row pairs") {
  CHECK(n2_pairs(2) == cached_enumeration(Board(2, 2)).endpoint_pairs);
  CHECK(n2_pairs(3) == cached_enumeration(Board(3, 2)).endpoint_pairs);
  CHECK(n2_pairs(5) == cached_enumeration(Board(5, 2)).endpoint_pairs);
  // odd-width-only rows show up exactly from m = 3
  CHECK(n2_pairs(3).count({{0, 1}, {1, 1}}));
}

TEST_CASE("initial-square density trend") {
  auto count_initials = [](int m, int n) {
    Board b(m, n);
    int c = 0;
    for (int q = 0; q < n; ++q)
      for (int p = 0; p < m; ++p) c += initial_square(b, {p, q}).matched;
    return c;
  };
  // square boards carry only a thin band of initial squares
  for (int n = 3; n <= 14; ++n) CHECK(count_initials(n, n) <= 3 * n);
  // very oblong boards approach half coverage
  for (auto [m, n] : {std::pair{40, 10}, {100, 20}}) {
    double frac = double(count_initials(m, n)) / (m * n);
    CHECK(frac > 0.4);
    CHECK(frac < 0.6);
  }
  // the square-board fraction keeps thinning as n grows
  double f3 = count_initials(3, 3) / 9.0;
  double f7 = count_initials(7, 7) / 49.0;
  double f12 = count_initials(12, 12) / 144.0;
  CHECK(f3 > f7);
  CHECK(f7 > f12);
}

TEST_CASE("single-row pairs") {
  auto p5 = n1_pairs(5);
  CHECK(p5.size() == 5);
  CHECK(p5.count({{4, 0}, {3, 0}}));
  CHECK(p5.count({{0, 0}, {4, 0}}));
  CHECK(n1_pairs(1) ==
        std::set<SquarePair>{{Square{0, 0}, Square{0, 0}}});
}
