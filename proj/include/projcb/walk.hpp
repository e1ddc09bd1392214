#ifndef PROJCB_WALK_HPP
#define PROJCB_WALK_HPP

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "projcb/board.hpp"

namespace projcb {

// An east/north move sequence with the builders the explicit path formulas
// need: runs, powers, concatenation, indexed blocks, last-term deletion.
class MoveSeq {
 public:
  MoveSeq() = default;
  explicit MoveSeq(std::string moves);  // validates letters E/N

  static MoveSeq single(Move m) { return MoveSeq(std::string(1, letter(m))); }
  static MoveSeq run(Move m, int count);

  // Concatenation of piece(i) for i = from..to.  to == from-1 yields the
  // empty sequence; a shorter range is an error like any negative exponent.
  static MoveSeq block(int from, int to,
                       const std::function<MoveSeq(int)>& piece);

  MoveSeq pow(int k) const;
  MoveSeq drop_last() const;  // shortens by exactly one move
  MoveSeq reversed() const;
  MoveSeq flipped_moves() const;  // E <-> N

  MoveSeq& operator+=(const MoveSeq& rhs) {
    s_ += rhs.s_;
    return *this;
  }
  MoveSeq& operator+=(Move m) {
    s_ += letter(m);
    return *this;
  }
  friend MoveSeq operator+(MoveSeq lhs, const MoveSeq& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend MoveSeq operator+(MoveSeq lhs, Move m) {
    lhs += m;
    return lhs;
  }

  int size() const { return static_cast<int>(s_.size()); }
  bool empty() const { return s_.empty(); }
  Move at(int i) const { return move_of(s_[i]); }
  const std::string& str() const { return s_; }

  friend bool operator==(const MoveSeq&, const MoveSeq&) = default;
  friend auto operator<=>(const MoveSeq&, const MoveSeq&) = default;

 private:
  std::string s_;
};

struct Walk {
  Board board;
  Square start;
  MoveSeq moves;

  friend bool operator==(const Walk& a, const Walk& b) {
    return a.board == b.board && a.start == b.start && a.moves == b.moves;
  }
};

// The visited squares in order; length |moves| + 1.
std::vector<Square> realize(const Walk& w);

Square final_square(const Walk& w);

// True iff the walk visits every square of its board exactly once.
bool is_hamiltonian_path(const Walk& w);

// The reverse path: from the rotation of the terminal square, taking the
// moves in reverse order.  Requires a hamiltonian input; an involution.
Walk inverted(const Walk& w);

// Start transposed, every move swapped E <-> N.  Requires a square board
// and a hamiltonian input; an involution.
Walk transposed(const Walk& w);

// The direction each square travels in a hamiltonian path.  Defined on all
// squares except the terminal one; the induced successor map is injective.
class TravelMap {
 public:
  TravelMap(const Board& b, Square terminal);

  const Board& board() const { return board_; }
  Square terminal() const { return terminal_; }

  std::optional<Move> at(Square s) const { return dir_[checked_index(s)]; }
  void set(Square s, Move m);
  int defined_count() const { return defined_; }

 private:
  size_t checked_index(Square s) const {
    if (!board_.contains(s))
      throw HypothesisViolation("square " + to_string(s) + " not on board");
    return static_cast<size_t>(board_.index(s));
  }

  Board board_;
  Square terminal_;
  std::vector<std::optional<Move>> dir_;
  int defined_ = 0;
};

// Walk -> TravelMap.  Requires a hamiltonian input.
TravelMap travel_map(const Walk& w);

// TravelMap -> Walk.  The initial square is the unique square no move
// enters; throws if the map's successor chain is not a hamiltonian path.
Walk walk_of(const TravelMap& tm);

// Ids of the non-terminal diagonals whose squares all travel east.  Throws
// MixedDiagonal if a non-terminal diagonal has squares of both directions.
std::set<int> east_set(const Walk& w, const Diagonals& dt);
std::set<int> east_set(const Walk& w);

}  // namespace projcb

#endif
