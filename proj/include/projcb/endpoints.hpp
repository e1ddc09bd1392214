#ifndef PROJCB_ENDPOINTS_HPP
#define PROJCB_ENDPOINTS_HPP

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "projcb/board.hpp"

namespace projcb {

// Outcome of an endpoint predicate, with the labels of every clause that
// matched so a disagreement with the enumerated ground truth can be pinned
// to a single transcription.
struct PredicateResult {
  bool matched = false;
  std::vector<std::string> clauses;

  explicit operator bool() const { return matched; }
};

// Whether (p,q) starts some hamiltonian path; six clauses.  m >= n >= 3.
PredicateResult initial_square(const Board& b, Square s);

// Whether (x,y) ends some hamiltonian path; six clauses.  m >= n >= 3.
PredicateResult terminal_square(const Board& b, Square s);

// Every square of the form "east image of the southeasternmost member of an
// upper subdiagonal": the column-0 edge {(0,q) : 1 <= q <= n-1}, plus
// {(p,0) : ceil((m+n-1)/2) <= p <= m-1} when m != n.  m >= n.
std::set<Square> tau_plus_e_form(const Board& b);

// Terminal squares of paths starting at (0,q), 1 <= q <= n-1.
std::set<Square> endpoints_from_0q(const Board& b, int q);

// Terminal squares of all-inner-east paths starting at (p,0),
// 1 <= p <= floor((m+n)/2) - 1.
std::set<Square> endpoints_from_p0_small(const Board& b, int p);

// Terminal squares of paths starting at (p,0),
// floor((m+n)/2) <= p <= m-1; requires m > n.
std::set<Square> endpoints_from_p0_large(const Board& b, int p);

using SquarePair = std::pair<Square, Square>;

// The complete set of (initial, terminal) pairs joined by a hamiltonian
// path, assembled from the per-initial-square sets and closed under
// rotation.  m >= n >= 3.
std::set<SquarePair> admissible_pairs(const Board& b);

// The n = 2 table: union of the ten rows under their restrictions.
std::set<SquarePair> n2_pairs(int m);

// The n = 1 family: {(east image of s, s)} over all squares s.
std::set<SquarePair> n1_pairs(int m);

}  // namespace projcb

#endif
