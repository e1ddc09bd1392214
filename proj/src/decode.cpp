#include "projcb/decode.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <map>
#include <mutex>

namespace projcb {

namespace {

// -1 = no move (terminal), otherwise a Move letter.
using DirTable = std::vector<signed char>;

std::optional<Walk> follow(const Board& b, const DirTable& dir, Square initial,
                           Square terminal) {
  std::vector<char> seen(static_cast<size_t>(b.size()), 0);
  MoveSeq moves;
  Square cur = initial;
  seen[static_cast<size_t>(b.index(cur))] = 1;
  for (int step = 0; step < b.size() - 1; ++step) {
    signed char d = dir[static_cast<size_t>(b.index(cur))];
    if (d < 0) return std::nullopt;  // hit the terminal square too early
    Move mv = move_of(static_cast<char>(d));
    cur = b.step(cur, mv);
    char& flag = seen[static_cast<size_t>(b.index(cur))];
    if (flag) return std::nullopt;  // closed a cycle
    flag = 1;
    moves += mv;
  }
  if (cur != terminal) return std::nullopt;
  return Walk{b, initial, moves};
}

void check_spec(const Diagonals& dt, const PathSpec& spec,
                const Diagonal& terminal_diag) {
  const Board& b = dt.board();
  if (terminal_diag.singleton)
    throw InvalidSpec("terminal diagonal cannot be the singleton");
  Square pre = b.step_back(spec.initial, Move::East);
  if (dt.id_of(pre) != terminal_diag.low)
    throw InvalidSpec("east preimage of the initial square is not in the "
                      "terminal diagonal");
  for (int id : spec.east) {
    try {
      dt.at(id);
    } catch (const HypothesisViolation&) {
      throw InvalidSpec("east-set names unknown diagonal " +
                        std::to_string(id));
    }
    if (id == terminal_diag.low)
      throw InvalidSpec("east-set must not contain the terminal diagonal");
  }
}

}  // namespace

std::optional<Walk> decode(const Diagonals& dt, const PathSpec& spec) {
  const Board& b = dt.board();
  if (!b.contains(spec.initial) || !b.contains(spec.terminal))
    throw InvalidSpec("spec endpoints must lie on the board");
  const Diagonal& td = dt.of(spec.terminal);
  check_spec(dt, spec, td);

  DirTable dir(static_cast<size_t>(b.size()), letter(Move::North));
  for (int id : dt.ids()) {
    if (id == td.low) continue;
    if (spec.east.count(id))
      for (Square s : dt.at(id).orbit)
        dir[static_cast<size_t>(b.index(s))] = letter(Move::East);
  }
  Square pre = b.step_back(spec.initial, Move::East);
  const int threshold = dt.steps_between(td, spec.terminal, pre);
  for (Square s : td.orbit) {
    signed char& d = dir[static_cast<size_t>(b.index(s))];
    if (s == spec.terminal)
      d = -1;
    else
      d = dt.steps_between(td, spec.terminal, s) < threshold
              ? letter(Move::East)
              : letter(Move::North);
  }
  return follow(b, dir, spec.initial, spec.terminal);
}

std::optional<Walk> decode(const Board& b, const PathSpec& spec) {
  return decode(Diagonals(b), spec);
}

PathSpec spec_of(const Walk& w, const Diagonals& dt) {
  if (!is_hamiltonian_path(w))
    throw HypothesisViolation("spec extraction requires a hamiltonian path");
  Square terminal = final_square(w);
  if (dt.of(terminal).singleton)
    throw InvalidSpec("terminal diagonal is the singleton; no spec exists");
  return {w.start, terminal, east_set(w, dt)};
}

PathSpec spec_of(const Walk& w) { return spec_of(w, Diagonals(w.board)); }

namespace {

struct Recorder {
  const Board& b;
  const Diagonals& dt;
  std::map<std::pair<Square, std::string>, PathRecord> found;

  void add(Walk w, std::optional<PathSpec> spec) {
    std::pair<Square, std::string> key{w.start, w.moves.str()};
    if (found.count(key)) return;
    if (!spec && !dt.of(final_square(w)).singleton) spec = spec_of(w, dt);
    found.emplace(std::move(key), PathRecord{std::move(w), std::move(spec)});
  }

  EnumerationReport report(std::string method, double elapsed) && {
    EnumerationReport r;
    r.m = b.m;
    r.n = b.n;
    r.method = std::move(method);
    r.elapsed_seconds = elapsed;
    for (auto& [key, rec] : found) {
      Square init = rec.walk.start;
      Square term = final_square(rec.walk);
      r.endpoint_pairs.insert({init, term});
      r.initials.insert(init);
      r.terminals.insert(term);
      if (!r.cycle_witness &&
          (b.east(term) == init || b.north(term) == init))
        r.cycle_witness = rec.walk;
      r.paths.push_back(std::move(rec));
    }
    return r;
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

}  // namespace

EnumerationReport enumerate_dfs(const Board& b,
                                const EnumerationOptions& opts) {
  const int mn = b.size();
  if (mn > opts.dfs_square_cap)
    throw CapExceeded("board has " + std::to_string(mn) +
                      " squares; exhaustive search cap is " +
                      std::to_string(opts.dfs_square_cap));
  if (mn > 64)
    throw CapExceeded("exhaustive search supports at most 64 squares");

  auto t0 = std::chrono::steady_clock::now();
  std::vector<int> east_idx(static_cast<size_t>(mn)),
      north_idx(static_cast<size_t>(mn));
  for (int idx = 0; idx < mn; ++idx) {
    Square s = b.square_at(idx);
    east_idx[static_cast<size_t>(idx)] = b.index(b.east(s));
    north_idx[static_cast<size_t>(idx)] = b.index(b.north(s));
  }

  Diagonals dt(b);
  Recorder rec{b, dt, {}};
  std::string moves(static_cast<size_t>(mn - 1), ' ');

  // Plain backtracking over self-avoiding walks.  Where the east and north
  // successors coincide (only at (m-1,n-1)) a single branch is explored,
  // labeled N, so each path is generated once per square sequence.
  auto dfs = [&](auto&& self, int cur, int depth, uint64_t visited,
                 Square start) -> void {
    if (depth == mn) {
      rec.add(Walk{b, start, MoveSeq(moves)}, std::nullopt);
      return;
    }
    int e = east_idx[static_cast<size_t>(cur)];
    int no = north_idx[static_cast<size_t>(cur)];
    if (e != no && !(visited >> e & 1)) {
      moves[static_cast<size_t>(depth - 1)] = 'E';
      self(self, e, depth + 1, visited | (uint64_t{1} << e), start);
    }
    if (!(visited >> no & 1)) {
      moves[static_cast<size_t>(depth - 1)] = 'N';
      self(self, no, depth + 1, visited | (uint64_t{1} << no), start);
    }
  };
  for (int idx = 0; idx < mn; ++idx)
    dfs(dfs, idx, 1, uint64_t{1} << idx, b.square_at(idx));

  return std::move(rec).report("dfs", seconds_since(t0));
}

EnumerationReport enumerate_diagonal(const Board& b,
                                     const EnumerationOptions& opts) {
  if (b.m < 3 || b.n < 3) return enumerate_dfs(b, opts);
  if (b.m + b.n > opts.diagonal_dim_cap)
    throw CapExceeded("m+n = " + std::to_string(b.m + b.n) +
                      " exceeds the diagonal enumeration cap " +
                      std::to_string(opts.diagonal_dim_cap));

  auto t0 = std::chrono::steady_clock::now();
  Diagonals dt(b);
  Recorder rec{b, dt, {}};

  for (int terminal_id : dt.ids()) {
    const Diagonal& td = dt.at(terminal_id);
    if (td.singleton) continue;  // never a terminal diagonal

    std::vector<int> others;  // east-set candidates, ascending
    for (int id : dt.ids())
      if (id != terminal_id && id != dt.singleton_id()) others.push_back(id);

    for (Square tau : td.orbit) {
      for (Square member : td.orbit) {
        Square iota = b.east(member);  // the initial squares compatible with tau
        PathSpec spec{iota, tau, {}};
        const uint64_t subsets = uint64_t{1} << others.size();
        for (uint64_t mask = 0; mask < subsets; ++mask) {
          spec.east.clear();
          for (size_t k = 0; k < others.size(); ++k)
            if (mask >> k & 1) spec.east.insert(others[k]);
          if (auto w = decode(dt, spec)) rec.add(std::move(*w), spec);
        }
      }
    }
  }
  return std::move(rec).report("diagonal", seconds_since(t0));
}

std::optional<Walk> reroute_outer(const Walk& w, Move direction) {
  Diagonals dt(w.board);
  PathSpec spec = spec_of(w, dt);
  const Diagonal& td = dt.of(spec.terminal);
  for (int id : dt.ids()) {
    if (classify(dt.at(id), td) != DiagonalClass::Outer) continue;
    if (direction == Move::East)
      spec.east.insert(id);
    else
      spec.east.erase(id);
  }
  return decode(dt, spec);
}

const EnumerationReport& cached_enumeration(const Board& b) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, EnumerationReport> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(b.m, b.n);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, enumerate_dfs(b)).first;
  return it->second;
}

}  // namespace projcb
