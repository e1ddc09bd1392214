#include "projcb/construct.hpp"

#include <cstdint>

namespace projcb {

namespace {

const Move E = Move::East;
const Move N = Move::North;

bool validated(const Walk& w, Square initial, Square terminal,
               bool require_all_north) {
  if (w.start != initial) return false;
  if (!is_hamiltonian_path(w)) return false;
  if (final_square(w) != terminal) return false;
  if (require_all_north) {
    try {
      if (!east_set(w).empty()) return false;
    } catch (const MixedDiagonal&) {
      return false;
    }
  }
  return true;
}

std::string dims(const Board& b) {
  return std::to_string(b.m) + "x" + std::to_string(b.n);
}

// Decoder route for the all-north families; the caller guarantees the
// target is reachable, so failure falsifies the family's statement.
Walk decode_all_north(const Board& b, Square initial, Square terminal,
                      const std::string& what) {
  auto w = decode(b, PathSpec{initial, terminal, {}});
  if (!w)
    throw ConstructionImpossible("no all-north path from " +
                                 to_string(initial) + " to " +
                                 to_string(terminal) + " on " + dims(b) +
                                 " (" + what + ")");
  return *w;
}

}  // namespace

const char* to_string(ConstructionLog::Literal v) {
  switch (v) {
    case ConstructionLog::Literal::Pass: return "pass";
    case ConstructionLog::Literal::Fail: return "fail";
    default: return "skipped";
  }
}

const char* to_string(ConstructionLog::Source v) {
  return v == ConstructionLog::Source::Formula ? "literal" : "decoder";
}

Construction construct_ha(const Board& b, int a) {
  if (b.m < b.n || b.n < 3)
    throw HypothesisViolation("construct_ha requires m >= n >= 3");
  const int upper = b.m + b.n - 3 - a;
  if (a < b.mf_minus)
    throw HypothesisViolation("construct_ha requires a >= " +
                              std::to_string(b.mf_minus) +
                              " so the target square exists");
  if (a > b.m - 2 || upper < b.m - 2)
    throw HypothesisViolation("construct_ha requires a <= m-2 <= m+n-3-a");

  Square initial = b.east(southeast_most(b, upper));
  Square target{b.mf_minus, a - b.mf_minus};

  // Printed sequence (N^(2n-1) E)^mf_minus N^(2n-1); when m is odd the
  // middle column is N-periodic with period n, so the trailing run must be
  // N^(n-1) instead for the move count to reach mn-1.
  int tail = (b.m % 2 == 0) ? 2 * b.n - 1 : b.n - 1;
  MoveSeq moves =
      (MoveSeq::run(N, 2 * b.n - 1) + E).pow(b.mf_minus) + MoveSeq::run(N, tail);
  Walk w{b, initial, moves};
  if (!validated(w, initial, target, true))
    throw ConstructionInvalid("construct_ha formula failed validation on " +
                              dims(b) + ", a=" + std::to_string(a));
  return {w, {"ha", b.m, b.n, "a=" + std::to_string(a),
              ConstructionLog::Literal::Pass, ConstructionLog::Source::Formula}};
}

Construction construct_hb(const Board& b, int a, int b_upper) {
  if (b.m < b.n || b.n < 3)
    throw HypothesisViolation("construct_hb requires m >= n >= 3");
  if (a + b_upper != b.m + b.n - 3)
    throw HypothesisViolation("construct_hb requires a + b = m+n-3");
  if (a == b_upper)
    throw HypothesisViolation("construct_hb requires a != b");
  if (a > b_upper)
    throw HypothesisViolation("construct_hb requires a <= b");
  if (a > b.m - 2 || b_upper < b.m - 2)
    throw HypothesisViolation("construct_hb requires a <= m-2 <= b");
  if (b_upper > b.mf + b.n - 1)
    throw HypothesisViolation("construct_hb requires b <= mf+n-1 so the "
                              "target square exists");

  Square initial = b.east(southeast_most(b, b_upper));
  Square target{b.mf, b_upper - b.mf};
  const std::string params =
      "a=" + std::to_string(a) + ",b=" + std::to_string(b_upper);

  // Printed indexed-block sequences, attempted literally first.
  auto literal = [&]() -> std::optional<Walk> {
    try {
      const int n = b.n;
      MoveSeq lead = (MoveSeq::run(N, 2 * n - 1) + E).pow(b_upper - n + 1);
      auto piece = [&](int i) {
        return MoveSeq::run(N, b_upper - a - 1) + E + MoveSeq::run(N, 2 * i - 1) +
               E + MoveSeq::run(N, n + a - b_upper - 2 * i + 1) + E;
      };
      MoveSeq moves;
      if (b.m % 2 == 1) {
        moves = lead + MoveSeq::block(1, b.mf + n - b_upper - 1, piece) +
                MoveSeq::run(N, b_upper - a - 1);
      } else {
        moves = lead + MoveSeq::block(1, b.mf + n - b_upper - 2, piece) +
                MoveSeq::run(N, b_upper - a - 1) + E +
                MoveSeq::run(N, n + a - b_upper) + E +
                MoveSeq::run(N, b_upper - a - 1);
      }
      Walk w{b, initial, moves};
      if (validated(w, initial, target, true)) return w;
    } catch (const HypothesisViolation&) {
      // negative exponent in the printed formula
    }
    return std::nullopt;
  };

  if (auto w = literal())
    return {*w, {"hb", b.m, b.n, params, ConstructionLog::Literal::Pass,
                 ConstructionLog::Source::Formula}};

  Walk w = decode_all_north(b, initial, target, "hb " + params);
  return {w, {"hb", b.m, b.n, params, ConstructionLog::Literal::Fail,
              ConstructionLog::Source::Decoder}};
}

Construction construct_exceptional(int m) {
  if (m < 5)
    throw HypothesisViolation("construct_exceptional requires m >= 5");
  Board b(m, m - 2);
  const int n = b.n;
  Square initial{m - 2, 0};
  Square target{b.mf - 1, b.mf_minus - 1};

  auto literal = [&]() -> std::optional<Walk> {
    try {
      auto piece = [&](int i) {
        return MoveSeq::single(E) + MoveSeq::run(N, 2 * n + 1 - 2 * i) +
               MoveSeq::run(E, 2) + MoveSeq::run(N, 2 * i);
      };
      MoveSeq moves;
      if (m % 2 == 1)
        moves = MoveSeq::block(1, b.nf - 1, piece) + E + MoveSeq::run(N, n);
      else
        moves = MoveSeq::block(1, b.nf, piece).drop_last();
      Walk w{b, initial, moves};
      if (validated(w, initial, target, true)) return w;
    } catch (const HypothesisViolation&) {
    }
    return std::nullopt;
  };

  if (auto w = literal())
    return {*w, {"exceptional", b.m, b.n, "", ConstructionLog::Literal::Pass,
                 ConstructionLog::Source::Formula}};

  Walk w = decode_all_north(b, initial, target, "exceptional");
  return {w, {"exceptional", b.m, b.n, "", ConstructionLog::Literal::Fail,
              ConstructionLog::Source::Decoder}};
}

Construction construct_n1(int m, int p) {
  Board b(m, 1);
  Square initial{p, 0};
  if (!b.contains(initial))
    throw HypothesisViolation("column " + std::to_string(p) +
                              " not on the 1-row board");
  Walk w{b, initial, MoveSeq::run(E, m - 1)};
  Square target = b.step_back(initial, E);
  if (!validated(w, initial, target, false))
    throw ConstructionInvalid("single-row construction failed validation");
  return {w, {"n1", m, 1, "p=" + std::to_string(p),
              ConstructionLog::Literal::Pass, ConstructionLog::Source::Formula}};
}

namespace {

// Endpoints and applicability of each n = 2 family row.
std::pair<Square, Square> n2_endpoints(const Board& b, N2Row row,
                                       const N2Params& prm) {
  const int m = b.m;
  auto need = [&](bool ok, const std::string& why) {
    if (!ok) throw HypothesisViolation("n2 row restriction violated: " + why);
  };
  switch (row) {
    case N2Row::A: {
      Square s{prm.p, prm.q};
      need(b.contains(s), "square on board");
      return {s, b.step_back(s, E)};
    }
    case N2Row::B:
      return {{0, 1}, {0, 0}};
    case N2Row::C:
      return {{1, 0}, {m - 2, 1}};
    case N2Row::D:
      return {{m - 1, 1}, {m - 1, 0}};
    case N2Row::E:
      need(m >= 3, "m >= 3");
      return {{0, 1}, {m - 2, 1}};
    case N2Row::F:
      need(m % 2 == 1, "m odd");
      return {{1, 0}, {m - 1, 0}};
    case N2Row::G:
      need(m >= 4, "m >= 4");
      return {{1, 0}, {m - 1, 0}};
    case N2Row::H:
      need(m >= 4 && b.mf_plus <= prm.p && prm.p <= m - 2,
           "m >= 4 and mf_plus <= p <= m-2");
      return {{prm.p, 1}, {m - 2 - prm.p, 1}};
    case N2Row::I:
      need(m >= 4 && prm.p >= b.mf_plus + 1 && prm.p <= m - 1,
           "m >= 4 and mf_plus+1 <= p <= m-1");
      return {{prm.p, 0}, {m - prm.p, 0}};
    case N2Row::J: {
      bool excluded = (prm.p == 1 || prm.p == b.mf || prm.p == b.mf + 1) &&
                      prm.p != b.mf_minus;
      need(m >= 5 && prm.p >= 2 && prm.p <= m - 1 && !excluded,
           "m >= 5, 2 <= p <= m-1, p not in ({1,mf,mf+1} minus {mf_minus})");
      return {{prm.p, 0}, {prm.p - 2, 1}};
    }
  }
  throw HypothesisViolation("unknown n2 row");
}

// First-match exhaustive search for a path between fixed endpoints; used
// where the terminal square is the board corner whose diagonal is the
// singleton, which no spec can express.
std::optional<Walk> dfs_between(const Board& b, Square initial,
                                Square target) {
  const int mn = b.size();
  if (mn > 64)
    throw CapExceeded("endpoint search supports at most 64 squares");
  std::string moves(static_cast<size_t>(mn - 1), ' ');
  std::optional<Walk> out;
  auto rec = [&](auto&& self, Square cur, int depth, uint64_t visited) -> bool {
    if (depth == mn) {
      if (cur != target) return false;
      out = Walk{b, initial, MoveSeq(moves)};
      return true;
    }
    Square e = b.east(cur), no = b.north(cur);
    if (e != no) {
      uint64_t bit = uint64_t{1} << b.index(e);
      if (!(visited & bit)) {
        moves[static_cast<size_t>(depth - 1)] = 'E';
        if (self(self, e, depth + 1, visited | bit)) return true;
      }
    }
    uint64_t bit = uint64_t{1} << b.index(no);
    if (!(visited & bit)) {
      moves[static_cast<size_t>(depth - 1)] = 'N';
      if (self(self, no, depth + 1, visited | bit)) return true;
    }
    return false;
  };
  rec(rec, initial, 1, uint64_t{1} << b.index(initial));
  return out;
}

}  // namespace

Construction construct_n2(int m, N2Row row, N2Params params) {
  if (m < 2) throw HypothesisViolation("construct_n2 requires m >= 2");
  Board b(m, 2);
  auto [initial, target] = n2_endpoints(b, row, params);
  const std::string tag =
      std::string(1, static_cast<char>('a' + static_cast<int>(row)));
  std::string prm;
  if (params.p >= 0) prm = ",p=" + std::to_string(params.p);
  if (params.q >= 0) prm += ",q=" + std::to_string(params.q);

  std::optional<Walk> found;
  Diagonals dt(b);
  if (!dt.of(target).singleton) {
    // Search the spec space: fixed endpoints, all east-subsets in order.
    std::vector<int> others;
    for (int id : dt.ids())
      if (id != dt.id_of(target) && id != dt.singleton_id())
        others.push_back(id);
    if (dt.id_of(b.step_back(initial, E)) == dt.id_of(target)) {
      const uint64_t subsets = uint64_t{1} << others.size();
      for (uint64_t mask = 0; mask < subsets && !found; ++mask) {
        PathSpec spec{initial, target, {}};
        for (size_t k = 0; k < others.size(); ++k)
          if (mask >> k & 1) spec.east.insert(others[k]);
        found = decode(dt, spec);
      }
    }
  } else {
    found = dfs_between(b, initial, target);
  }
  if (!found || !validated(*found, initial, target, false))
    throw ConstructionImpossible("no path realizes n2 row " + tag + " on m=" +
                                 std::to_string(m));
  return {*found, {"n2", m, 2, "row=" + tag + prm,
                   ConstructionLog::Literal::Skipped,
                   ConstructionLog::Source::Decoder}};
}

std::optional<Walk> construct_canonical(const Board& b, const PathSpec& spec) {
  return decode(b, spec);
}

}  // namespace projcb
