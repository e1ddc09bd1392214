#ifndef PROJCB_REDUCE_HPP
#define PROJCB_REDUCE_HPP

#include "projcb/decode.hpp"

namespace projcb {

// Index relabeling for removing (or inserting) the subdiagonals i and j of a
// rowful diagonal; i == j for the self-paired middle subdiagonal.
struct DeltaMap {
  int i;
  int j;

  DeltaMap(int i_, int j_) : i(i_), j(j_) {
    if (i < 0 || i > j)
      throw HypothesisViolation("delta map needs 0 <= i <= j");
  }

  // How many of {i, j} lie below k.
  int operator()(int k) const { return (k > i) + (i != j && k > j); }

  // (p - delta(p+q), q); defined only off the removed subdiagonals.
  Square apply(Square s) const {
    int sum = s.p + s.q;
    if (sum == i || sum == j)
      throw HypothesisViolation("square " + to_string(s) +
                                " lies on a removed subdiagonal");
    return {s.p - (*this)(sum), s.q};
  }

  // Inverse relabeling from the contracted board back to the host board.
  Square unapply(Square s) const {
    int sum = s.p + s.q;
    int shift;
    if (i == j)
      shift = sum < i ? 0 : 1;
    else if (sum < i)
      shift = 0;
    else if (sum < j - 1)
      shift = 1;
    else
      shift = 2;
    return {s.p + shift, s.q};
  }
};

// Splices the squares of a rowful, non-terminal, east-traveling diagonal out
// of a hamiltonian path, producing a hamiltonian path on the board with
// that diagonal's subdiagonals removed.  Surviving squares keep their travel
// direction.
Walk contract_rowful_east(const Walk& w, int diagonal_id);

// Inverse: re-inserts subdiagonals i <= j (i == j for a one-subdiagonal
// insertion), which must form a rowful diagonal of the widened board; the
// inserted diagonal travels east.
Walk expand_rowful_east(const Walk& w, int i, int j);

// The bookkeeping that converts a path question with terminal diagonal
// (a, b) and e east-traveling rowful inner subdiagonals into a path
// question on the narrower board of width m - 2*o - e.
struct StretchParams {
  int a = 0, b = 0;
  int o = 0;       // number of rowful outer diagonals
  int e = 0;
  int e1 = 0, e2 = 0;
  int m_prime = 0;
  int a_prime = 0, b_prime = 0;
  int p_prime = 0, x_prime = 0;
};

StretchParams stretch_params(const Board& bd, int a, int b, Square initial,
                             Square terminal, int e);

// Checks the reduction correspondence empirically in both directions: a
// path from `initial` to `terminal` with exactly e east-traveling rowful
// inner subdiagonals exists iff the bound on e, the parity condition, and
// the narrower-board path condition all hold.  Returns that shared truth
// value; throws Error if the two sides disagree (which would falsify the
// correspondence).
bool verify_stretch(const Board& bd, Square initial, Square terminal, int e);

// The number of east-traveling rowful inner subdiagonals of a path.
int rowful_inner_east_count(const Walk& w, const Diagonals& dt);

}  // namespace projcb

#endif
