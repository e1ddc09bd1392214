#include "projcb/endpoints.hpp"

namespace projcb {

namespace {

void require_tall_enough(const Board& b, const char* what) {
  if (b.m < b.n || b.n < 3)
    throw HypothesisViolation(std::string(what) + " requires m >= n >= 3");
}

// Squares on the subdiagonal p+q = sum whose column lies in [lo, hi].
void add_sum_range(const Board& b, std::set<Square>& out, int sum, int lo,
                   int hi) {
  for (int x = std::max(lo, 0); x <= std::min(hi, b.m - 1); ++x) {
    Square s{x, sum - x};
    if (b.contains(s)) out.insert(s);
  }
}

}  // namespace

PredicateResult initial_square(const Board& b, Square s) {
  require_tall_enough(b, "initial_square");
  if (!b.contains(s))
    throw HypothesisViolation("square " + to_string(s) + " not on board");
  const int p = s.p, q = s.q, m = b.m, n = b.n;
  PredicateResult r;
  auto clause = [&](bool hit, const char* label) {
    if (hit) {
      r.matched = true;
      r.clauses.push_back(label);
    }
  };
  clause(p == 0 && b.nf_minus <= q, "init:1");
  clause(b.nf_minus <= p && q == 0, "init:2");
  clause(b.mf_plus <= p && q == b.nf, "init:3");
  clause(p <= b.nf && q == b.nf_minus, "init:4");
  clause(b.mf <= p && p <= m - b.nf_plus && b.nf + 1 <= q, "init:5");
  clause(b.nf_minus <= p && p <= b.mf_minus && q <= b.nf, "init:6");
  (void)n;
  return r;
}

PredicateResult terminal_square(const Board& b, Square s) {
  require_tall_enough(b, "terminal_square");
  if (!b.contains(s))
    throw HypothesisViolation("square " + to_string(s) + " not on board");
  const int x = s.p, y = s.q, m = b.m, n = b.n;
  PredicateResult r;
  auto clause = [&](bool hit, const char* label) {
    if (hit) {
      r.matched = true;
      r.clauses.push_back(label);
    }
  };
  clause(x == m - 1 && y <= b.nf, "term:1");
  clause(x <= m - b.nf_plus && y == n - 1, "term:2");
  clause(x <= b.mf - 1 && y == b.nf_minus, "term:3");
  clause(m - b.nf - 1 <= x && y == b.nf, "term:4");
  clause(b.nf_minus <= x && x <= b.mf_minus && y <= b.nf_minus - 1, "term:5");
  clause(b.mf <= x && x <= m - b.nf_plus && b.nf_minus <= y, "term:6");
  return r;
}

std::set<Square> tau_plus_e_form(const Board& b) {
  if (b.m < b.n)
    throw HypothesisViolation("tau_plus_e_form requires m >= n");
  std::set<Square> out;
  for (int q = 1; q <= b.n - 1; ++q) out.insert({0, q});
  if (b.m != b.n)
    for (int p = (b.m + b.n) / 2; p <= b.m - 1; ++p) out.insert({p, 0});
  return out;
}

std::set<Square> endpoints_from_0q(const Board& b, int q) {
  require_tall_enough(b, "endpoints_from_0q");
  if (q < 1 || q > b.n - 1)
    throw HypothesisViolation("q = " + std::to_string(q) + " out of range");
  std::set<Square> out;
  if (q - 1 >= b.nf_minus)
    add_sum_range(b, out, q - 1, b.nf_minus, b.mf_minus);
  if (q >= b.nf_minus)
    add_sum_range(b, out, b.m + b.n - q - 2, b.mf, b.m - b.nf_plus);
  return out;
}

std::set<Square> endpoints_from_p0_small(const Board& b, int p) {
  require_tall_enough(b, "endpoints_from_p0_small");
  if (p < 1 || p > (b.m + b.n) / 2 - 1)
    throw HypothesisViolation("p = " + std::to_string(p) + " out of range");
  std::set<Square> out;
  if (p - 1 >= b.nf_minus) {
    Square s{p - 1 - b.nf_minus, b.nf_minus};
    if (b.contains(s)) out.insert(s);
  }
  if (b.nf_minus <= p && p <= b.n - 1) {
    Square s{b.m + b.n - p - 2 - b.nf, b.nf};
    if (b.contains(s)) out.insert(s);
  }
  return out;
}

std::set<Square> endpoints_from_p0_large(const Board& b, int p) {
  if (b.m <= b.n || b.n < 3)
    throw HypothesisViolation("endpoints_from_p0_large requires m > n >= 3");
  if (p < (b.m + b.n) / 2 || p > b.m - 1)
    throw HypothesisViolation("p = " + std::to_string(p) + " out of range");
  std::set<Square> out;
  const bool middle = 2 * p == b.m + b.n - 1;
  if (!middle)
    add_sum_range(b, out, b.m + b.n - p - 2, b.m - p + b.nf_minus, b.mf_minus);
  add_sum_range(b, out, p - 1, b.mf, p - b.nf_plus);
  if (middle) out.insert({b.mf_minus, b.nf_minus});
  return out;
}

std::set<SquarePair> admissible_pairs(const Board& b) {
  require_tall_enough(b, "admissible_pairs");
  std::set<SquarePair> pairs;
  for (int q = 1; q <= b.n - 1; ++q)
    for (Square t : endpoints_from_0q(b, q)) pairs.insert({{0, q}, t});
  const int split = (b.m + b.n) / 2;
  for (int p = 1; p < split; ++p)
    for (Square t : endpoints_from_p0_small(b, p)) pairs.insert({{p, 0}, t});
  if (b.m > b.n)
    for (int p = split; p <= b.m - 1; ++p)
      for (Square t : endpoints_from_p0_large(b, p)) pairs.insert({{p, 0}, t});

  std::set<SquarePair> closed = pairs;
  for (const auto& [init, term] : pairs)
    closed.insert({b.rotated(term), b.rotated(init)});
  return closed;
}

std::set<SquarePair> n2_pairs(int m) {
  if (m < 2) throw HypothesisViolation("n2_pairs requires m >= 2");
  Board b(m, 2);
  std::set<SquarePair> out;
  auto east_back = [&](Square s) { return b.step_back(s, Move::East); };

  for (int p = 0; p < m; ++p)
    for (int q = 0; q < 2; ++q)
      out.insert({{p, q}, east_back({p, q})});               // row a
  out.insert({{0, 1}, {0, 0}});                              // row b
  out.insert({{1, 0}, {m - 2, 1}});                          // row c
  out.insert({{m - 1, 1}, {m - 1, 0}});                      // row d
  if (m >= 3) out.insert({{0, 1}, {m - 2, 1}});              // row e
  if (m % 2 == 1) out.insert({{1, 0}, {m - 1, 0}});          // row f
  if (m >= 4) {
    out.insert({{1, 0}, {m - 1, 0}});                        // row g
    for (int p = b.mf_plus; p <= m - 2; ++p)
      out.insert({{p, 1}, {m - 2 - p, 1}});                  // row h
    for (int p = b.mf_plus + 1; p <= m - 1; ++p)
      out.insert({{p, 0}, {m - p, 0}});                      // row i
  }
  if (m >= 5)
    for (int p = 2; p <= m - 1; ++p) {                       // row j
      bool excluded =
          (p == 1 || p == b.mf || p == b.mf + 1) && p != b.mf_minus;
      if (!excluded) out.insert({{p, 0}, {p - 2, 1}});
    }
  return out;
}

std::set<SquarePair> n1_pairs(int m) {
  Board b(m, 1);
  std::set<SquarePair> out;
  for (int x = 0; x < m; ++x) {
    Square s{x, 0};
    out.insert({b.east(s), s});
  }
  return out;
}

}  // namespace projcb
