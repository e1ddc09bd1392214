#include "projcb/verify.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "projcb/construct.hpp"
#include "projcb/decode.hpp"
#include "projcb/endpoints.hpp"
#include "projcb/reduce.hpp"
#include "projcb/serialize.hpp"

namespace projcb {

namespace {

constexpr int kMaxListed = 4;  // counterexamples listed per failing check

class Check {
 public:
  explicit Check(std::string name) { result_.name = std::move(name); }

  void fail(const std::string& detail) {
    result_.status = CheckResult::Status::Fail;
    if (++failures_ <= kMaxListed) {
      if (!result_.detail.empty()) result_.detail += "; ";
      result_.detail += detail;
    }
  }

  void warn(const std::string& detail) {
    if (result_.status == CheckResult::Status::Pass)
      result_.status = CheckResult::Status::Warn;
    if (++warns_ <= kMaxListed) {
      if (!result_.detail.empty()) result_.detail += "; ";
      result_.detail += detail;
    }
  }

  void require(bool ok, const std::function<std::string()>& detail) {
    ++instances_;
    if (!ok) fail(detail());
  }

  void count() { ++instances_; }

  CheckResult done() {
    if (result_.status == CheckResult::Status::Pass)
      result_.detail = std::to_string(instances_) + " instances";
    else if (failures_ > kMaxListed || warns_ > kMaxListed)
      result_.detail += "; ... (" + std::to_string(failures_ + warns_) +
                        " total)";
    return result_;
  }

 private:
  CheckResult result_;
  long instances_ = 0;
  int failures_ = 0;
  int warns_ = 0;
};

std::string dims(const Board& b) {
  return std::to_string(b.m) + "x" + std::to_string(b.n);
}

std::string describe(const Board& b, const Walk& w) {
  return dims(b) + " [" + to_string(w.start) + "]" + w.moves.str();
}

std::vector<Board> boards_in(int lo_n, int max_m, int max_n) {
  std::vector<Board> out;
  for (int m = 3; m <= max_m; ++m)
    for (int n = lo_n; n <= std::min(m, max_n); ++n) out.emplace_back(m, n);
  return out;
}

std::set<Square> predicate_squares(
    const Board& b, const std::function<PredicateResult(Square)>& pred) {
  std::set<Square> out;
  for (int q = 0; q < b.n; ++q)
    for (int p = 0; p < b.m; ++p)
      if (pred({p, q}).matched) out.insert({p, q});
  return out;
}

template <typename T>
std::string set_difference_note(const std::set<T>& got,
                                const std::set<T>& want) {
  int extra = 0, missing = 0;
  for (const T& v : got) extra += !want.count(v);
  for (const T& v : want) missing += !got.count(v);
  return std::to_string(extra) + " extra, " + std::to_string(missing) +
         " missing";
}

// ---------------------------------------------------------------- theorems

void check_endpoint_sets_vs_dfs(std::vector<CheckResult>& out,
                                const VerifyOptions& opts) {
  Check inits("initial-squares-match-exhaustive");
  Check terms("terminal-squares-match-exhaustive");
  Check pairs("endpoint-pairs-match-exhaustive");
  Check duality("initial-terminal-rotation-duality");
  for (const Board& b : boards_in(3, opts.max_m, opts.max_n)) {
    const EnumerationReport& rep = cached_enumeration(b);
    auto pred_i =
        predicate_squares(b, [&](Square s) { return initial_square(b, s); });
    auto pred_t =
        predicate_squares(b, [&](Square s) { return terminal_square(b, s); });
    inits.require(pred_i == rep.initials, [&] {
      return dims(b) + ": " + set_difference_note(pred_i, rep.initials);
    });
    terms.require(pred_t == rep.terminals, [&] {
      return dims(b) + ": " + set_difference_note(pred_t, rep.terminals);
    });
    auto pred_pairs = admissible_pairs(b);
    pairs.require(pred_pairs == rep.endpoint_pairs, [&] {
      return dims(b) + ": " +
             set_difference_note(pred_pairs, rep.endpoint_pairs);
    });
    for (int q = 0; q < b.n; ++q)
      for (int p = 0; p < b.m; ++p) {
        Square s{p, q};
        duality.require(terminal_square(b, s).matched ==
                            initial_square(b, b.rotated(s)).matched,
                        [&] { return dims(b) + " at " + to_string(s); });
      }
  }
  out.push_back(inits.done());
  out.push_back(terms.done());
  out.push_back(pairs.done());
  out.push_back(duality.done());
}

void check_duality_wide(std::vector<CheckResult>& out,
                        const VerifyOptions& opts) {
  Check duality("rotation-duality-wide");
  for (const Board& b : boards_in(3, opts.build_max_m, opts.build_max_m))
    for (int q = 0; q < b.n; ++q)
      for (int p = 0; p < b.m; ++p) {
        Square s{p, q};
        duality.require(terminal_square(b, s).matched ==
                            initial_square(b, b.rotated(s)).matched,
                        [&] { return dims(b) + " at " + to_string(s); });
      }
  out.push_back(duality.done());
}

void check_diagonal_endpoints(std::vector<CheckResult>& out,
                              const VerifyOptions& opts) {
  Check c("diagonal-method-endpoints-match-predicates");
  for (const Board& b : boards_in(3, opts.diag_max_m, opts.diag_max_m)) {
    EnumerationReport rep = enumerate_diagonal(b);
    auto pred_i =
        predicate_squares(b, [&](Square s) { return initial_square(b, s); });
    auto pred_t =
        predicate_squares(b, [&](Square s) { return terminal_square(b, s); });
    c.require(rep.initials == pred_i && rep.terminals == pred_t, [&] {
      return dims(b) + ": initials " +
             set_difference_note(rep.initials, pred_i) + "; terminals " +
             set_difference_note(rep.terminals, pred_t);
    });
  }
  out.push_back(c.done());
}

void check_cross_method(std::vector<CheckResult>& out,
                        const VerifyOptions& opts) {
  Check c("diagonal-method-matches-exhaustive");
  for (const Board& b : boards_in(3, opts.max_m, opts.max_n)) {
    EnumerationReport diag = enumerate_diagonal(b);
    const EnumerationReport& dfs = cached_enumeration(b);
    auto serialize = [](const EnumerationReport& r) {
      std::string s;
      for (const PathRecord& rec : r.paths) s += walk_to_json(rec.walk) + "\n";
      return s;
    };
    c.require(serialize(diag) == serialize(dfs), [&] {
      return dims(b) + ": " + std::to_string(diag.count()) + " vs " +
             std::to_string(dfs.count()) + " paths";
    });
  }
  out.push_back(c.done());
}

// ------------------------------------------------------------------- props

bool local_rules_ok(const Board& b, const TravelMap& tm, const Diagonals& dt,
                    Square initial, std::string* why) {
  Square tau = tm.terminal();
  const Diagonal& td = dt.of(tau);
  auto dir = [&](Square s) { return tm.at(s); };
  auto ne = [&](Square s) { return b.step_back(b.north(s), Move::East); };
  auto en = [&](Square s) { return b.step_back(b.east(s), Move::North); };
  auto is_east = [&](Square s) { return dir(s) == Move::East; };
  auto is_north = [&](Square s) { return dir(s) == Move::North; };

  if (b.north(tau) != initial && !is_east(ne(tau))) {
    *why = "rule 1 at " + to_string(tau);
    return false;
  }
  if (b.east(tau) != initial && !is_north(en(tau))) {
    *why = "rule 2 at " + to_string(tau);
    return false;
  }
  for (Square s : td.orbit) {
    if (is_east(s) && b.north(s) != initial && !is_east(ne(s))) {
      *why = "rule 3 at " + to_string(s);
      return false;
    }
    if (is_east(s) && is_north(en(s))) {
      *why = "rule 4 at " + to_string(s);
      return false;
    }
    if (is_north(s) && b.east(s) != initial && !is_north(en(s))) {
      *why = "rule 5 at " + to_string(s);
      return false;
    }
    if (is_north(s) && is_east(ne(s))) {
      *why = "rule 6 at " + to_string(s);
      return false;
    }
  }
  return true;
}

bool inverse_subpath_ok(const Walk& w, const Diagonals& dt,
                        std::string* why) {
  const Board& b = w.board;
  auto seq = realize(w);
  const Diagonal& td = dt.of(seq.back());
  std::vector<int> position(static_cast<size_t>(b.size()), -1);
  for (size_t k = 0; k < seq.size(); ++k)
    position[static_cast<size_t>(b.index(seq[k]))] = static_cast<int>(k);
  for (Square s : subdiagonal(b, td.high + 1)) {
    Square expected = b.rotated(s);
    bool found = false;
    for (size_t k = static_cast<size_t>(position[b.index(s)]) + 1;
         k < seq.size(); ++k) {
      if (seq[k].p + seq[k].q != td.low) continue;
      if (seq[k] != expected) {
        *why = "subpath from " + to_string(s) + " ends at " +
               to_string(seq[k]) + ", expected " + to_string(expected);
        return false;
      }
      found = true;
      break;
    }
    if (!found) {
      *why = "no lower-subdiagonal square after " + to_string(s);
      return false;
    }
  }
  return true;
}

bool all_north_initial_ok(const Walk& w, const Diagonals& dt,
                          const PathSpec& spec, std::string* why) {
  if (!spec.east.empty()) return true;
  const Board& b = w.board;
  const Diagonal& td = dt.of(spec.terminal);
  const int a = td.low, upper = td.high;
  if (!(a <= b.m - 2 && b.m - 2 <= upper)) {
    *why = "all-north path with terminal diagonal (" + std::to_string(a) +
           "," + std::to_string(upper) + ") not straddling m-2";
    return false;
  }
  Square tau_se = southeast_most(b, upper);
  Square tpe = b.east(tau_se);
  Walk inv = inverted(w);
  if (w.start == tpe || inv.start == tpe) return true;
  if (b.m == b.n && a + 2 == b.m && upper + 1 == b.m &&
      (transposed(w).start == tpe || transposed(inv).start == tpe))
    return true;
  if (a + 1 == upper && upper == b.n && b.n == b.m - 2 &&
      (w.start == tau_se || inv.start == tau_se))
    return true;
  *why = "all-north path starts at " + to_string(w.start) +
         " (inverse at " + to_string(inv.start) + "), expected " +
         to_string(tpe);
  return false;
}

void check_path_invariants(std::vector<CheckResult>& out,
                           const VerifyOptions& opts) {
  Check uniform("diagonal-direction-uniformity");
  Check membership("terminal-diagonal-contains-initial-east-preimage");
  Check monotone("terminal-orbit-index-monotonicity");
  Check local("terminal-diagonal-local-rules");
  Check subpaths("inverse-endpoint-subpaths");
  Check inject("path-spec-injectivity");
  Check corner("no-corner-start-no-cycle");
  Check allnorth("all-north-initial-characterization");
  Check invol("inversion-involution");
  Check roundtrip("travel-map-round-trip");

  for (const Board& b : boards_in(3, opts.max_m, opts.max_n)) {
    const EnumerationReport& rep = cached_enumeration(b);
    Diagonals dt(b);
    std::set<PathSpec> specs;
    corner.require(!rep.cycle_witness.has_value(),
                   [&] { return dims(b) + " has a hamiltonian cycle"; });
    for (const PathRecord& rec : rep.paths) {
      const Walk& w = rec.walk;
      std::string why;

      std::optional<PathSpec> spec;
      try {
        spec = spec_of(w, dt);
        uniform.count();
      } catch (const MixedDiagonal& e) {
        uniform.fail(describe(b, w) + ": " + e.what());
        continue;
      }
      specs.insert(*spec);

      Square pre = b.step_back(w.start, Move::East);
      membership.require(dt.id_of(pre) == dt.id_of(spec->terminal), [&] {
        return describe(b, w);
      });

      const Diagonal& td = dt.of(spec->terminal);
      TravelMap tm = travel_map(w);
      bool mono = true;
      const int threshold = dt.steps_between(td, spec->terminal, pre);
      for (Square s : td.orbit) {
        if (s == spec->terminal) continue;
        bool east = *tm.at(s) == Move::East;
        if (east != (dt.steps_between(td, spec->terminal, s) < threshold))
          mono = false;
        // the dual index based at the east preimage of the initial square
        if (east != (dt.steps_between(td, s, pre) <
                     dt.steps_between(td, spec->terminal, pre)))
          mono = false;
      }
      monotone.require(mono, [&] { return describe(b, w); });

      local.require(local_rules_ok(b, tm, dt, w.start, &why),
                    [&] { return describe(b, w) + ": " + why; });
      subpaths.require(inverse_subpath_ok(w, dt, &why),
                       [&] { return describe(b, w) + ": " + why; });
      corner.require(w.start != Square{0, 0},
                     [&] { return describe(b, w) + " starts at the corner"; });
      allnorth.require(all_north_initial_ok(w, dt, *spec, &why),
                       [&] { return describe(b, w) + ": " + why; });

      Walk inv = inverted(w);
      invol.require(is_hamiltonian_path(inv) && inverted(inv) == w &&
                        inv.start == b.rotated(spec->terminal) &&
                        final_square(inv) == b.rotated(w.start),
                    [&] { return describe(b, w); });
      roundtrip.require(walk_of(tm) == w, [&] { return describe(b, w); });
    }
    inject.require(specs.size() == rep.paths.size(), [&] {
      return dims(b) + ": " + std::to_string(rep.paths.size()) +
             " paths but " + std::to_string(specs.size()) + " distinct specs";
    });
  }
  out.push_back(uniform.done());
  out.push_back(membership.done());
  out.push_back(monotone.done());
  out.push_back(local.done());
  out.push_back(subpaths.done());
  out.push_back(inject.done());
  out.push_back(corner.done());
  out.push_back(allnorth.done());
  out.push_back(invol.done());
  out.push_back(roundtrip.done());
}

void check_reroute(std::vector<CheckResult>& out, const VerifyOptions& opts) {
  Check east("outer-reroute-east-always");
  Check north("outer-reroute-north-iff-straddling-not-outer");
  for (const Board& b : boards_in(3, opts.max_m, opts.max_n)) {
    Diagonals dt(b);
    const int straddle_id = std::min(b.n - 1, b.m - 2);
    for (const PathRecord& rec : cached_enumeration(b).paths) {
      const Walk& w = rec.walk;
      Square init = w.start, term = final_square(w);
      auto re = reroute_outer(w, Move::East);
      east.require(re && is_hamiltonian_path(*re) && re->start == init &&
                       final_square(*re) == term,
                   [&] { return describe(b, w); });
      bool outer = straddle_id < dt.id_of(term);
      auto rn = reroute_outer(w, Move::North);
      north.require(rn.has_value() == !outer, [&] {
        return describe(b, w) + (outer ? ": rerouted despite outer"
                                       : ": failed though not outer");
      });
    }
  }
  out.push_back(east.done());
  out.push_back(north.done());
}

void check_narrow_board_cycles(std::vector<CheckResult>& out) {
  Check c("narrow-boards-have-cycles");
  for (auto [m, n] : {std::pair{2, 1}, {5, 1}, {2, 2}, {6, 2}, {9, 2}}) {
    const EnumerationReport& rep = cached_enumeration(Board(m, n));
    c.require(rep.cycle_witness.has_value(), [&] {
      return std::to_string(m) + "x" + std::to_string(n) + ": no cycle";
    });
    std::set<Square> all;
    for (int q = 0; q < n; ++q)
      for (int p = 0; p < m; ++p) all.insert({p, q});
    c.require(rep.initials == all && rep.terminals == all, [&] {
      return std::to_string(m) + "x" + std::to_string(n) +
             ": some square misses an endpoint role";
    });
  }
  out.push_back(c.done());
}

// ----------------------------------------------------------- constructions

void check_construction_families(std::vector<CheckResult>& out,
                                 const VerifyOptions& opts) {
  Check ha("all-north-lower-target-family");
  Check hb("all-north-upper-target-family");
  Check exc("exceptional-board-family");
  int hb_literal_fail = 0, hb_total = 0;
  int exc_literal_fail = 0, exc_total = 0;

  for (const Board& b : boards_in(3, opts.build_max_m, opts.build_max_m)) {
    const int top = b.m + b.n - 3;
    for (int a = 0; 2 * a <= top; ++a) {
      const int upper = top - a;
      if (a >= b.mf_minus && a <= b.m - 2 && b.m - 2 <= upper) {
        try {
          construct_ha(b, a);
          ha.count();
        } catch (const Error& e) {
          ha.fail(dims(b) + " a=" + std::to_string(a) + ": " + e.what());
        }
      }
      if (a != upper && a <= b.m - 2 && b.m - 2 <= upper &&
          upper <= b.mf + b.n - 1) {
        ++hb_total;
        try {
          Construction c = construct_hb(b, a, upper);
          hb.count();
          hb_literal_fail +=
              c.log.literal == ConstructionLog::Literal::Fail;
        } catch (const Error& e) {
          hb.fail(dims(b) + " a=" + std::to_string(a) +
                  ",b=" + std::to_string(upper) + ": " + e.what());
        }
      }
    }
  }
  for (int m = 5; m <= opts.build_max_m; ++m) {
    ++exc_total;
    try {
      Construction c = construct_exceptional(m);
      exc.count();
      exc_literal_fail += c.log.literal == ConstructionLog::Literal::Fail;
    } catch (const Error& e) {
      exc.fail("m=" + std::to_string(m) + ": " + e.what());
    }
  }
  if (hb_literal_fail)
    hb.warn("printed formula failed on " + std::to_string(hb_literal_fail) +
            "/" + std::to_string(hb_total) + " instances (decoder used)");
  if (exc_literal_fail)
    exc.warn("printed formula failed on " + std::to_string(exc_literal_fail) +
             "/" + std::to_string(exc_total) + " instances (decoder used)");
  out.push_back(ha.done());
  out.push_back(hb.done());
  out.push_back(exc.done());
}

void check_all_north_completeness(std::vector<CheckResult>& out,
                                  const VerifyOptions& opts) {
  Check c("all-north-terminal-completeness");
  for (const Board& b : boards_in(3, opts.sweep_max_m, opts.sweep_max_m)) {
    Diagonals dt(b);
    const int top = b.m + b.n - 3;
    for (int a = 0; 2 * a <= top; ++a) {
      const int upper = top - a;
      Square initial = b.east(southeast_most(b, upper));
      std::set<Square> reachable;
      for (Square tau : dt.at(a).orbit) {
        try {
          if (decode(dt, PathSpec{initial, tau, {}})) reachable.insert(tau);
        } catch (const InvalidSpec&) {
        }
      }
      std::set<Square> expected;
      if (a <= b.m - 2 && b.m - 2 <= upper) {
        if (a >= b.mf_minus) expected.insert({b.mf_minus, a - b.mf_minus});
        if (a != upper && upper <= b.mf + b.n - 1)
          expected.insert({b.mf, upper - b.mf});
      }
      c.require(reachable == expected, [&] {
        return dims(b) + " diagonal (" + std::to_string(a) + "," +
               std::to_string(upper) + "): " +
               set_difference_note(reachable, expected);
      });
    }
  }
  out.push_back(c.done());
}

void check_exceptional_completeness(std::vector<CheckResult>& out) {
  Check c("exceptional-board-terminal-completeness");
  for (int m = 5; m <= 10; ++m) {
    Board b(m, m - 2);
    Diagonals dt(b);
    Square initial{m - 2, 0};
    const Diagonal& td = dt.of(b.step_back(initial, Move::East));
    std::set<Square> reachable;
    for (Square tau : td.orbit) {
      try {
        if (decode(dt, PathSpec{initial, tau, {}})) reachable.insert(tau);
      } catch (const InvalidSpec&) {
      }
    }
    std::set<Square> expected{{b.mf - 1, b.mf_minus - 1}};
    c.require(reachable == expected, [&] {
      return dims(b) + ": " + set_difference_note(reachable, expected);
    });
  }
  out.push_back(c.done());
}

void check_small_n_constructions(std::vector<CheckResult>& out,
                                 const VerifyOptions& opts) {
  Check n1("single-row-construction");
  for (int m = 1; m <= opts.n1_max_m; ++m)
    for (int p = 0; p < m; ++p) {
      try {
        Construction c = construct_n1(m, p);
        Board b(m, 1);
        n1.require(final_square(c.walk) == b.step_back({p, 0}, Move::East),
                   [&] { return "m=" + std::to_string(m) +
                                ",p=" + std::to_string(p); });
      } catch (const Error& e) {
        n1.fail("m=" + std::to_string(m) + ",p=" + std::to_string(p) + ": " +
                e.what());
      }
    }
  out.push_back(n1.done());

  Check n2("two-row-constructions");
  for (int m = 2; m <= opts.n2_max_m; ++m) {
    Board b(m, 2);
    auto attempt = [&](N2Row row, N2Params prm) {
      try {
        Construction c = construct_n2(m, row, prm);
        n2.require(is_hamiltonian_path(c.walk),
                   [&] { return "m=" + std::to_string(m); });
      } catch (const HypothesisViolation&) {
        // row not applicable at these parameters
      } catch (const Error& e) {
        n2.fail("m=" + std::to_string(m) + " row " +
                std::to_string(static_cast<int>(row)) + ": " + e.what());
      }
    };
    for (int p = 0; p < m; ++p)
      for (int q = 0; q < 2; ++q) attempt(N2Row::A, {p, q});
    for (N2Row row : {N2Row::B, N2Row::C, N2Row::D, N2Row::E, N2Row::F,
                      N2Row::G})
      attempt(row, {});
    for (int p = 0; p < m; ++p)
      for (N2Row row : {N2Row::H, N2Row::I, N2Row::J}) attempt(row, {p, -1});
  }
  out.push_back(n2.done());
}

// -------------------------------------------------------------- reductions

void check_contraction_roundtrip(std::vector<CheckResult>& out) {
  Check c("rowful-contraction-round-trip");
  Check dirs("contraction-preserves-directions");
  for (int m = 1; m <= 36; ++m)
    for (int n = 1; n <= m && m * n <= 36; ++n) {
      Board b(m, n);
      Diagonals dt(b);
      for (const PathRecord& rec : cached_enumeration(b).paths) {
        const Walk& w = rec.walk;
        Square term = final_square(w);
        std::set<int> east;
        try {
          east = east_set(w, dt);
        } catch (const MixedDiagonal& e) {
          c.fail(describe(b, w) + ": " + e.what());
          continue;
        }
        for (int id : east) {
          const Diagonal& d = dt.at(id);
          if (d.singleton || !rowful(b, d) || dt.id_of(term) == id) continue;
          try {
            Walk narrow = contract_rowful_east(w, id);
            c.require(expand_rowful_east(narrow, d.low, d.high) == w,
                      [&] { return describe(b, w) + " diag " +
                                   std::to_string(id); });
            TravelMap tm = travel_map(w), tm2 = travel_map(narrow);
            DeltaMap dm(d.low, d.high);
            bool same = true;
            for (int idx = 0; idx < b.size(); ++idx) {
              Square s = b.square_at(idx);
              if (d.contains_sum(s.p + s.q) || s == term) continue;
              if (tm2.at(dm.apply(s)) != tm.at(s)) same = false;
            }
            dirs.require(same, [&] {
              return describe(b, w) + " diag " + std::to_string(id);
            });
          } catch (const Error& e) {
            c.fail(describe(b, w) + " diag " + std::to_string(id) + ": " +
                   e.what());
          }
        }
      }
    }
  out.push_back(c.done());
  out.push_back(dirs.done());
}

void check_inner_east_rule(std::vector<CheckResult>& out,
                           const VerifyOptions& opts) {
  Check c("east-inner-diagonal-rowful-or-all-east");
  for (const Board& b : boards_in(3, opts.max_m, opts.max_n)) {
    Diagonals dt(b);
    for (const PathRecord& rec : cached_enumeration(b).paths) {
      if (!rec.spec) continue;
      const Diagonal& td = dt.of(rec.spec->terminal);
      std::vector<int> inner;
      for (int id : dt.ids()) {
        if (id == dt.singleton_id() || id == td.low) continue;
        if (classify(dt.at(id), td) == DiagonalClass::Inner)
          inner.push_back(id);
      }
      bool all_inner_east = true;
      for (int id : inner)
        if (!rec.spec->east.count(id)) all_inner_east = false;
      for (int id : inner) {
        if (!rec.spec->east.count(id)) continue;
        c.require(rowful(b, dt.at(id)) || all_inner_east, [&] {
          return describe(b, rec.walk) + " inner diag " + std::to_string(id);
        });
      }
    }
  }
  out.push_back(c.done());
}

void check_stretch(std::vector<CheckResult>& out, const VerifyOptions& opts) {
  Check c("stretch-correspondence");
  Check realized("stretch-realized-triples");
  for (const Board& b : boards_in(3, opts.max_m, opts.max_n)) {
    Diagonals dt(b);
    int top = b.m + b.n - 3;
    for (int a = 0; 2 * a <= top; ++a) {
      const Diagonal& td = dt.at(a);
      int e_cap = std::max(std::min(b.m - b.n, td.high - td.low - 1), 0);
      for (Square tau : td.orbit) {
        for (int sub : {td.low + 1, td.high + 1}) {
          for (Square init : subdiagonal(b, sub)) {
            for (int e = 0; e <= e_cap + 1; ++e) {
              try {
                if (verify_stretch(b, init, tau, e)) realized.count();
                c.count();
              } catch (const Error& err) {
                c.fail(err.what());
              }
            }
          }
          if (td.low == td.high) break;
        }
      }
    }
  }
  out.push_back(c.done());
  out.push_back(realized.done());
}

// --------------------------------------------------------------------- n12

void check_small_n_pairs(std::vector<CheckResult>& out,
                         const VerifyOptions& opts) {
  Check n1("single-row-pairs-match-exhaustive");
  for (int m = 1; m <= opts.n1_max_m; ++m) {
    auto want = n1_pairs(m);
    const auto& got = cached_enumeration(Board(m, 1)).endpoint_pairs;
    n1.require(want == got,
               [&] { return "m=" + std::to_string(m) + ": " +
                            set_difference_note(want, got); });
  }
  out.push_back(n1.done());

  Check n2("two-row-pairs-match-exhaustive");
  for (int m = 2; m <= opts.n2_max_m; ++m) {
    auto want = n2_pairs(m);
    const auto& got = cached_enumeration(Board(m, 2)).endpoint_pairs;
    n2.require(want == got,
               [&] { return "m=" + std::to_string(m) + ": " +
                            set_difference_note(want, got); });
  }
  out.push_back(n2.done());
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "theorems", "props", "constructions", "reductions", "n12", "all"};
  return names;
}

std::vector<CheckResult> run_suite(const std::string& suite,
                                   const VerifyOptions& opts) {
  std::vector<CheckResult> out;
  bool all = suite == "all";
  if (suite == "theorems" || all) {
    check_endpoint_sets_vs_dfs(out, opts);
    check_duality_wide(out, opts);
    check_cross_method(out, opts);
    check_diagonal_endpoints(out, opts);
  }
  if (suite == "props" || all) {
    check_path_invariants(out, opts);
    check_reroute(out, opts);
    check_narrow_board_cycles(out);
  }
  if (suite == "constructions" || all) {
    check_construction_families(out, opts);
    check_all_north_completeness(out, opts);
    check_exceptional_completeness(out);
    check_small_n_constructions(out, opts);
  }
  if (suite == "reductions" || all) {
    check_contraction_roundtrip(out);
    check_inner_east_rule(out, opts);
    check_stretch(out, opts);
  }
  if (suite == "n12" || all) check_small_n_pairs(out, opts);
  if (out.empty())
    throw HypothesisViolation("unknown suite '" + suite + "'");
  return out;
}

bool has_failures(const std::vector<CheckResult>& results) {
  return std::any_of(results.begin(), results.end(), [](const CheckResult& r) {
    return r.status == CheckResult::Status::Fail;
  });
}

std::string format_results(const std::vector<CheckResult>& results) {
  std::ostringstream os;
  for (const CheckResult& r : results) {
    const char* tag = r.status == CheckResult::Status::Pass   ? "PASS"
                      : r.status == CheckResult::Status::Warn ? "WARN"
                                                              : "FAIL";
    os << tag << "  " << r.name;
    if (!r.detail.empty()) os << ": " << r.detail;
    os << '\n';
  }
  return os.str();
}

}  // namespace projcb
