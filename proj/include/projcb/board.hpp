#ifndef PROJCB_BOARD_HPP
#define PROJCB_BOARD_HPP

// The m x n projective checkerboard: squares are pairs (p,q) with
// 0 <= p <= m-1 and 0 <= q <= n-1.  A checker moves east or north, and
// stepping off the edge re-enters on the opposite side with the other
// coordinate flipped (the projective-plane gluing):
//
//   (p,q)E = (p+1,q)      if p < m-1,   else (0, n-1-q)
//   (p,q)N = (p,q+1)      if q < n-1,   else (m-1-p, 0)
//
// Both maps are bijections on the square set.

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace projcb {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A stated precondition does not hold for the given arguments.
struct HypothesisViolation : Error {
  using Error::Error;
};

// A path spec violates its invariants (incompatible endpoints, bad east-set).
struct InvalidSpec : Error {
  using Error::Error;
};

// A non-terminal diagonal with squares traveling in both directions.
struct MixedDiagonal : Error {
  explicit MixedDiagonal(int diagonal_id)
      : Error("mixed travel directions in non-terminal diagonal " +
              std::to_string(diagonal_id)),
        diagonal(diagonal_id) {}
  int diagonal;
};

// An enumeration request exceeds the configured size cap.
struct CapExceeded : Error {
  using Error::Error;
};

// A construction formula produced a walk that failed self-validation.
struct ConstructionInvalid : Error {
  using Error::Error;
};

// Neither the printed formula nor the decoder produced the promised path.
struct ConstructionImpossible : Error {
  using Error::Error;
};

enum class Move : char { East = 'E', North = 'N' };

constexpr char letter(Move m) { return static_cast<char>(m); }

inline Move move_of(char c) {
  if (c == 'E') return Move::East;
  if (c == 'N') return Move::North;
  throw Error(std::string("invalid move letter '") + c + "'");
}

constexpr Move flipped(Move m) {
  return m == Move::East ? Move::North : Move::East;
}

struct Square {
  int p = 0;
  int q = 0;
  friend constexpr bool operator==(const Square&, const Square&) = default;
  friend constexpr auto operator<=>(const Square&, const Square&) = default;
};

inline std::string to_string(Square s) {
  return "(" + std::to_string(s.p) + "," + std::to_string(s.q) + ")";
}

class Board {
 public:
  Board(int columns, int rows) : m(columns), n(rows) {
    if (m < 1 || n < 1)
      throw HypothesisViolation("board dimensions must be at least 1x1");
    mf = m / 2;
    mf_minus = (m - 1) / 2;
    mf_plus = (m + 1) / 2;
    nf = n / 2;
    nf_minus = (n - 1) / 2;
    nf_plus = (n + 1) / 2;
  }

  int m;
  int n;
  // Half constants: mf = floor(m/2), mf_minus = floor((m-1)/2),
  // mf_plus = floor((m+1)/2) = ceil(m/2) = mf_minus + 1; same for n.
  int mf, mf_minus, mf_plus;
  int nf, nf_minus, nf_plus;

  int size() const { return m * n; }

  bool contains(Square s) const {
    return s.p >= 0 && s.p < m && s.q >= 0 && s.q < n;
  }

  int index(Square s) const { return s.q * m + s.p; }
  Square square_at(int idx) const { return {idx % m, idx / m}; }

  Square east(Square s) const {
    require(s);
    return s.p < m - 1 ? Square{s.p + 1, s.q} : Square{0, n - 1 - s.q};
  }

  Square north(Square s) const {
    require(s);
    return s.q < n - 1 ? Square{s.p, s.q + 1} : Square{m - 1 - s.p, 0};
  }

  Square step(Square s, Move mv) const {
    return mv == Move::East ? east(s) : north(s);
  }

  // The unique square whose east (resp. north) image is s.
  Square step_back(Square s, Move mv) const {
    require(s);
    if (mv == Move::East)
      return s.p > 0 ? Square{s.p - 1, s.q} : Square{m - 1, n - 1 - s.q};
    return s.q > 0 ? Square{s.p, s.q - 1} : Square{m - 1 - s.p, n - 1};
  }

  // 180-degree rotation; an involution.
  Square rotated(Square s) const {
    require(s);
    return {m - 1 - s.p, n - 1 - s.q};
  }

  // Reflection across the main diagonal; defined only for square boards.
  Square transposed(Square s) const {
    if (m != n)
      throw HypothesisViolation("transpose requires a square board");
    require(s);
    return {s.q, s.p};
  }

  friend bool operator==(const Board& a, const Board& b) {
    return a.m == b.m && a.n == b.n;
  }

 private:
  void require(Square s) const {
    if (!contains(s))
      throw HypothesisViolation("square " + to_string(s) + " not on " +
                                std::to_string(m) + "x" + std::to_string(n) +
                                " board");
  }
};

// All squares with p + q = i, ascending p.  0 <= i <= m+n-2.
std::vector<Square> subdiagonal(const Board& b, int i);

// The member of subdiagonal S_i with maximal column (minimal row).
Square southeast_most(const Board& b, int subdiag);

// A direction-forcing diagonal: the union S_low ∪ S_high with
// low + high = m+n-3 (low <= high), or the one-square diagonal {(m-1,n-1)}
// identified by index m+n-2.  Members are stored in the orbit order of the
// map s -> E-preimage of sN, starting from the southeasternmost member, so
// that step counts around the orbit are position differences.
struct Diagonal {
  int low = 0;
  int high = 0;
  bool singleton = false;
  std::vector<Square> orbit;

  int size() const { return static_cast<int>(orbit.size()); }
  bool contains_sum(int s) const {
    return singleton ? s == low : (s == low || s == high);
  }
};

enum class DiagonalClass { Terminal, Inner, Outer };

// Per-board diagonal table: which diagonal each square belongs to and where
// it sits in that diagonal's orbit.
class Diagonals {
 public:
  explicit Diagonals(const Board& b);

  const Board& board() const { return board_; }

  // Number of diagonals, the singleton included.
  int count() const { return static_cast<int>(all_.size()); }

  // Canonical ids in ascending order; the singleton id (= m+n-2) is last.
  const std::vector<int>& ids() const { return ids_; }
  int singleton_id() const { return board_.m + board_.n - 2; }

  const Diagonal& at(int id) const;
  const Diagonal& of(Square s) const { return at(id_of(s)); }
  int id_of(Square s) const { return id_by_square_[checked_index(s)]; }
  int orbit_pos(Square s) const { return pos_by_square_[checked_index(s)]; }

  // The unique k in {1,...,|d|} such that `to` is reached from `from` by k
  // applications of s -> E-preimage of sN.  Requires a non-singleton d with
  // both squares as members.
  int steps_between(const Diagonal& d, Square from, Square to) const;

 private:
  size_t checked_index(Square s) const {
    if (!board_.contains(s))
      throw HypothesisViolation("square " + to_string(s) + " not on board");
    return static_cast<size_t>(board_.index(s));
  }

  Board board_;
  std::vector<Diagonal> all_;
  std::vector<int> ids_;
  std::vector<int> slot_by_id_;
  std::vector<int> id_by_square_;
  std::vector<int> pos_by_square_;
};

// True iff both subdiagonal indices lie in [n-1, m-2], i.e. each constituent
// subdiagonal meets every row.  Rejects the singleton.
bool rowful(const Board& b, const Diagonal& d);

// Position of d relative to a (non-singleton) terminal diagonal.  The
// singleton diagonal counts as inner: its index exceeds every upper
// subdiagonal index.
DiagonalClass classify(const Diagonal& d, const Diagonal& terminal);

}  // namespace projcb

#endif
