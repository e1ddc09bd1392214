#include "projcb/reduce.hpp"

#include <algorithm>

namespace projcb {

Walk contract_rowful_east(const Walk& w, int diagonal_id) {
  const Board& b = w.board;
  Diagonals dt(b);
  const Diagonal& d = dt.at(diagonal_id);
  if (d.singleton || !rowful(b, d))
    throw HypothesisViolation("diagonal " + std::to_string(diagonal_id) +
                              " is not rowful");
  if (!is_hamiltonian_path(w))
    throw HypothesisViolation("contraction requires a hamiltonian path");
  TravelMap tm = travel_map(w);
  if (dt.id_of(tm.terminal()) == diagonal_id)
    throw HypothesisViolation("cannot contract the terminal diagonal");
  if (!east_set(w, dt).count(diagonal_id))
    throw HypothesisViolation("diagonal " + std::to_string(diagonal_id) +
                              " does not travel east");

  DeltaMap dm(d.low, d.high);
  Board narrow(b.m - dm(b.m + b.n), b.n);
  TravelMap out(narrow, dm.apply(tm.terminal()));
  for (int idx = 0; idx < b.size(); ++idx) {
    Square s = b.square_at(idx);
    if (d.contains_sum(s.p + s.q) || s == tm.terminal()) continue;
    out.set(dm.apply(s), *tm.at(s));
  }
  return walk_of(out);
}

Walk expand_rowful_east(const Walk& w, int i, int j) {
  const Board& small = w.board;
  DeltaMap dm(i, j);
  Board wide(small.m + (i == j ? 1 : 2), small.n);
  if (i + j != wide.m + wide.n - 3)
    throw HypothesisViolation("subdiagonals " + std::to_string(i) + "," +
                              std::to_string(j) +
                              " do not pair on the widened board");
  if (i < wide.n - 1 || j > wide.m - 2)
    throw HypothesisViolation("inserted diagonal is not rowful on the "
                              "widened board");
  if (!is_hamiltonian_path(w))
    throw HypothesisViolation("expansion requires a hamiltonian path");

  TravelMap tm = travel_map(w);
  TravelMap out(wide, dm.unapply(tm.terminal()));
  for (int idx = 0; idx < small.size(); ++idx) {
    Square s = small.square_at(idx);
    if (s == tm.terminal()) continue;
    out.set(dm.unapply(s), *tm.at(s));
  }
  for (int sum : {i, j}) {
    for (Square s : subdiagonal(wide, sum)) out.set(s, Move::East);
    if (i == j) break;
  }
  return walk_of(out);
}

StretchParams stretch_params(const Board& bd, int a, int b, Square initial,
                             Square terminal, int e) {
  if (bd.m < bd.n)
    throw HypothesisViolation("stretch parameters assume m >= n");
  if (a > b || a + b != bd.m + bd.n - 3)
    throw HypothesisViolation("(a,b) must be a diagonal pairing with a <= b");
  if (!bd.contains(initial) || !bd.contains(terminal))
    throw HypothesisViolation("stretch endpoints must lie on the board");
  int isum = initial.p + initial.q - 1;
  if (isum != a && isum != b)
    throw HypothesisViolation("initial square must sit just past the "
                              "terminal diagonal");
  int tsum = terminal.p + terminal.q;
  if (tsum != a && tsum != b)
    throw HypothesisViolation("terminal square must lie in the terminal "
                              "diagonal");
  if (e < 0) throw HypothesisViolation("e must be non-negative");

  StretchParams sp;
  sp.a = a;
  sp.b = b;
  sp.o = std::max(a - bd.n + 1, 0);
  sp.e = e;
  sp.e1 = isum == a ? 0 : e;
  sp.e2 = tsum == a ? 0 : e;
  sp.m_prime = bd.m - 2 * sp.o - e;
  sp.a_prime = a - sp.o;
  sp.b_prime = b - sp.o - e;
  sp.p_prime = initial.p - sp.o - sp.e1;
  sp.x_prime = terminal.p - sp.o - sp.e2;
  return sp;
}

int rowful_inner_east_count(const Walk& w, const Diagonals& dt) {
  const Board& b = w.board;
  const Diagonal& td = dt.of(final_square(w));
  int count = 0;
  for (int id : east_set(w, dt)) {
    const Diagonal& d = dt.at(id);
    if (d.singleton) continue;
    if (classify(d, td) == DiagonalClass::Inner && rowful(b, d))
      count += d.low == d.high ? 1 : 2;
  }
  return count;
}

bool verify_stretch(const Board& bd, Square initial, Square terminal, int e) {
  if (!bd.contains(initial) || !bd.contains(terminal))
    throw HypothesisViolation("stretch endpoints must lie on the board");
  Diagonals dt(bd);
  const Diagonal& td = dt.of(terminal);
  if (td.singleton)
    throw HypothesisViolation("terminal square lies in the singleton diagonal");
  StretchParams sp = stretch_params(bd, td.low, td.high, initial, terminal, e);

  bool exists = false;
  for (const PathRecord& rec : cached_enumeration(bd).paths) {
    if (rec.walk.start != initial || final_square(rec.walk) != terminal)
      continue;
    if (rowful_inner_east_count(rec.walk, dt) == e) {
      exists = true;
      break;
    }
  }

  bool bound_ok =
      e <= std::max(std::min(bd.m - bd.n, td.high - td.low - 1), 0);
  bool parity_ok = (bd.m + bd.n) % 2 == 1 || e % 2 == 0;

  bool narrow_ok = false;
  if (bound_ok && sp.m_prime >= 1) {
    Board narrow(sp.m_prime, bd.n);
    Square init2{sp.p_prime, initial.q};
    Square term2{sp.x_prime, terminal.q};
    if (narrow.contains(init2) && narrow.contains(term2)) {
      Diagonals dt2(narrow);
      auto decodes = [&](const std::set<int>& east) {
        try {
          return decode(dt2, PathSpec{init2, term2, east}).has_value();
        } catch (const InvalidSpec&) {
          return false;
        }
      };
      if (sp.m_prime >= narrow.n && decodes({})) narrow_ok = true;  // all north
      if (!narrow_ok && sp.m_prime == narrow.n && narrow.n >= td.low + 3) {
        std::set<int> all_east;  // all non-terminal paired diagonals east
        for (int id : dt2.ids())
          if (id != dt2.id_of(term2) && id != dt2.singleton_id())
            all_east.insert(id);
        narrow_ok = decodes(all_east);
      }
    }
  }

  bool conditions = bound_ok && parity_ok && narrow_ok;
  if (exists != conditions)
    throw Error("reduction correspondence violated on " + std::to_string(bd.m) +
                "x" + std::to_string(bd.n) + " from " + to_string(initial) +
                " to " + to_string(terminal) + " with e=" + std::to_string(e) +
                ": path " + (exists ? "exists" : "missing") +
                " but conditions " + (conditions ? "hold" : "fail"));
  return exists;
}

}  // namespace projcb
