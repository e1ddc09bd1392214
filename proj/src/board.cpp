#include "projcb/board.hpp"

#include <algorithm>

namespace projcb {

std::vector<Square> subdiagonal(const Board& b, int i) {
  if (i < 0 || i > b.m + b.n - 2)
    throw HypothesisViolation("subdiagonal index " + std::to_string(i) +
                              " out of range for " + std::to_string(b.m) +
                              "x" + std::to_string(b.n));
  std::vector<Square> out;
  for (int p = std::max(0, i - (b.n - 1)); p <= std::min(i, b.m - 1); ++p)
    out.push_back({p, i - p});
  return out;
}

Square southeast_most(const Board& b, int subdiag) {
  auto members = subdiagonal(b, subdiag);
  return members.back();  // ascending p: last member has maximal column
}

Diagonals::Diagonals(const Board& b)
    : board_(b),
      slot_by_id_(b.m + b.n, -1),
      id_by_square_(b.size(), -1),
      pos_by_square_(b.size(), -1) {
  const int top = b.m + b.n - 3;
  for (int low = 0; 2 * low <= top; ++low) {
    Diagonal d;
    d.low = low;
    d.high = top - low;
    d.singleton = false;

    // Seed the orbit at the member with maximal p (minimal q on ties).
    std::vector<Square> members = subdiagonal(b, low);
    if (d.high != d.low) {
      auto upper = subdiagonal(b, d.high);
      members.insert(members.end(), upper.begin(), upper.end());
    }
    Square seed = members.front();
    for (Square s : members)
      if (s.p > seed.p || (s.p == seed.p && s.q < seed.q)) seed = s;

    Square cur = seed;
    do {
      d.orbit.push_back(cur);
      cur = b.step_back(b.north(cur), Move::East);
    } while (cur != seed &&
             static_cast<int>(d.orbit.size()) <= static_cast<int>(members.size()));
    if (d.orbit.size() != members.size())
      throw Error("diagonal orbit does not close over S_" +
                  std::to_string(d.low) + " ∪ S_" + std::to_string(d.high));
    all_.push_back(std::move(d));
  }

  Diagonal single;
  single.low = single.high = singleton_id();
  single.singleton = true;
  single.orbit.push_back({b.m - 1, b.n - 1});
  all_.push_back(std::move(single));

  for (int slot = 0; slot < count(); ++slot) {
    const Diagonal& d = all_[slot];
    ids_.push_back(d.low);
    slot_by_id_[d.low] = slot;
    for (int pos = 0; pos < d.size(); ++pos) {
      int idx = board_.index(d.orbit[pos]);
      id_by_square_[idx] = d.low;
      pos_by_square_[idx] = pos;
    }
  }
}

const Diagonal& Diagonals::at(int id) const {
  if (id < 0 || id >= static_cast<int>(slot_by_id_.size()) ||
      slot_by_id_[id] < 0)
    throw HypothesisViolation("no diagonal with id " + std::to_string(id));
  return all_[slot_by_id_[id]];
}

int Diagonals::steps_between(const Diagonal& d, Square from, Square to) const {
  if (d.singleton)
    throw HypothesisViolation("orbit steps undefined on the singleton diagonal");
  if (id_of(from) != d.low || id_of(to) != d.low)
    throw HypothesisViolation("squares " + to_string(from) + ", " +
                              to_string(to) + " not both in diagonal " +
                              std::to_string(d.low));
  int delta = (orbit_pos(to) - orbit_pos(from)) % d.size();
  if (delta <= 0) delta += d.size();
  return delta;
}

bool rowful(const Board& b, const Diagonal& d) {
  if (d.singleton)
    throw HypothesisViolation("rowful is undefined for the singleton diagonal");
  return b.n - 1 <= d.low && d.high <= b.m - 2;
}

DiagonalClass classify(const Diagonal& d, const Diagonal& terminal) {
  if (terminal.singleton)
    throw HypothesisViolation("terminal diagonal cannot be the singleton");
  if (d.singleton) return DiagonalClass::Inner;
  if (d.low == terminal.low) return DiagonalClass::Terminal;
  return d.low < terminal.low ? DiagonalClass::Outer : DiagonalClass::Inner;
}

}  // namespace projcb
