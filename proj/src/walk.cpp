#include "projcb/walk.hpp"

#include <algorithm>

namespace projcb {

MoveSeq::MoveSeq(std::string moves) : s_(std::move(moves)) {
  for (char c : s_) move_of(c);
}

MoveSeq MoveSeq::run(Move m, int count) {
  if (count < 0)
    throw HypothesisViolation("negative run exponent " + std::to_string(count));
  MoveSeq out;
  out.s_.assign(static_cast<size_t>(count), letter(m));
  return out;
}

MoveSeq MoveSeq::block(int from, int to,
                       const std::function<MoveSeq(int)>& piece) {
  if (to < from - 1)
    throw HypothesisViolation("negative block count: i = " +
                              std::to_string(from) + ".." + std::to_string(to));
  MoveSeq out;
  for (int i = from; i <= to; ++i) out += piece(i);
  return out;
}

MoveSeq MoveSeq::pow(int k) const {
  if (k < 0)
    throw HypothesisViolation("negative power exponent " + std::to_string(k));
  MoveSeq out;
  out.s_.reserve(s_.size() * static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) out.s_ += s_;
  return out;
}

MoveSeq MoveSeq::drop_last() const {
  if (s_.empty())
    throw HypothesisViolation("cannot delete the last term of an empty sequence");
  MoveSeq out(*this);
  out.s_.pop_back();
  return out;
}

MoveSeq MoveSeq::reversed() const {
  MoveSeq out(*this);
  std::reverse(out.s_.begin(), out.s_.end());
  return out;
}

MoveSeq MoveSeq::flipped_moves() const {
  MoveSeq out(*this);
  for (char& c : out.s_) c = letter(flipped(move_of(c)));
  return out;
}

std::vector<Square> realize(const Walk& w) {
  std::vector<Square> seq;
  seq.reserve(static_cast<size_t>(w.moves.size()) + 1);
  Square cur = w.start;
  seq.push_back(cur);
  for (int i = 0; i < w.moves.size(); ++i) {
    cur = w.board.step(cur, w.moves.at(i));
    seq.push_back(cur);
  }
  return seq;
}

Square final_square(const Walk& w) {
  Square cur = w.start;
  for (int i = 0; i < w.moves.size(); ++i) cur = w.board.step(cur, w.moves.at(i));
  return cur;
}

bool is_hamiltonian_path(const Walk& w) {
  if (!w.board.contains(w.start)) return false;
  if (w.moves.size() != w.board.size() - 1) return false;
  std::vector<char> seen(static_cast<size_t>(w.board.size()), 0);
  Square cur = w.start;
  seen[static_cast<size_t>(w.board.index(cur))] = 1;
  for (int i = 0; i < w.moves.size(); ++i) {
    cur = w.board.step(cur, w.moves.at(i));
    char& flag = seen[static_cast<size_t>(w.board.index(cur))];
    if (flag) return false;
    flag = 1;
  }
  return true;
}

Walk inverted(const Walk& w) {
  if (!is_hamiltonian_path(w))
    throw HypothesisViolation("inversion requires a hamiltonian path");
  return {w.board, w.board.rotated(final_square(w)), w.moves.reversed()};
}

Walk transposed(const Walk& w) {
  if (w.board.m != w.board.n)
    throw HypothesisViolation("transpose requires a square board");
  if (!is_hamiltonian_path(w))
    throw HypothesisViolation("transpose requires a hamiltonian path");
  return {w.board, w.board.transposed(w.start), w.moves.flipped_moves()};
}

TravelMap::TravelMap(const Board& b, Square terminal)
    : board_(b), terminal_(terminal),
      dir_(static_cast<size_t>(b.size())) {
  if (!b.contains(terminal))
    throw HypothesisViolation("terminal square " + to_string(terminal) +
                              " not on board");
}

void TravelMap::set(Square s, Move m) {
  if (s == terminal_)
    throw HypothesisViolation("terminal square has no travel direction");
  auto& slot = dir_[checked_index(s)];
  if (!slot) ++defined_;
  slot = m;
}

TravelMap travel_map(const Walk& w) {
  if (!is_hamiltonian_path(w))
    throw HypothesisViolation("travel map requires a hamiltonian path");
  TravelMap tm(w.board, final_square(w));
  Square cur = w.start;
  for (int i = 0; i < w.moves.size(); ++i) {
    tm.set(cur, w.moves.at(i));
    cur = w.board.step(cur, w.moves.at(i));
  }
  return tm;
}

Walk walk_of(const TravelMap& tm) {
  const Board& b = tm.board();
  if (tm.defined_count() != b.size() - 1)
    throw Error("travel map defined on " + std::to_string(tm.defined_count()) +
                " squares, expected " + std::to_string(b.size() - 1));
  std::vector<char> entered(static_cast<size_t>(b.size()), 0);
  for (int idx = 0; idx < b.size(); ++idx) {
    Square s = b.square_at(idx);
    if (auto mv = tm.at(s))
      entered[static_cast<size_t>(b.index(b.step(s, *mv)))] = 1;
  }
  Square initial{-1, -1};
  for (int idx = 0; idx < b.size(); ++idx)
    if (!entered[static_cast<size_t>(idx)]) {
      if (initial.p >= 0) throw Error("travel map successor chain is not a path");
      initial = b.square_at(idx);
    }
  if (initial.p < 0) throw Error("travel map successor chain is a cycle");

  MoveSeq moves;
  Square cur = initial;
  while (auto mv = tm.at(cur)) {
    moves += *mv;
    cur = b.step(cur, *mv);
  }
  Walk w{b, initial, moves};
  if (cur != tm.terminal() || !is_hamiltonian_path(w))
    throw Error("travel map does not describe a hamiltonian path");
  return w;
}

std::set<int> east_set(const Walk& w, const Diagonals& dt) {
  TravelMap tm = travel_map(w);
  const int terminal_id = dt.id_of(tm.terminal());
  std::set<int> east;
  for (int id : dt.ids()) {
    if (id == terminal_id) continue;
    int easts = 0, norths = 0;
    for (Square s : dt.at(id).orbit)
      (*tm.at(s) == Move::East ? easts : norths)++;
    if (easts && norths) throw MixedDiagonal(id);
    if (easts) east.insert(id);
  }
  return east;
}

std::set<int> east_set(const Walk& w) {
  return east_set(w, Diagonals(w.board));
}

}  // namespace projcb
