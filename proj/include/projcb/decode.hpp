#ifndef PROJCB_DECODE_HPP
#define PROJCB_DECODE_HPP

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "projcb/walk.hpp"

namespace projcb {

// The coordinates that determine a hamiltonian path uniquely: its initial
// square, its terminal square, and which non-terminal diagonals travel east.
struct PathSpec {
  Square initial;
  Square terminal;
  std::set<int> east;  // diagonal ids

  friend bool operator==(const PathSpec&, const PathSpec&) = default;
  friend auto operator<=>(const PathSpec&, const PathSpec&) = default;
};

// Builds the travel map a spec dictates and follows its successor chain.
// Returns the walk iff the chain visits every square, ending at the
// terminal; at most one hamiltonian path matches a spec.  Throws InvalidSpec
// when the spec violates its invariants (terminal diagonal singleton, east
// preimage of the initial square not in the terminal diagonal, east-set
// containing the terminal diagonal or unknown ids).
std::optional<Walk> decode(const Diagonals& dt, const PathSpec& spec);
std::optional<Walk> decode(const Board& b, const PathSpec& spec);

// The inverse direction: extract a walk's spec.  Requires a hamiltonian
// walk whose terminal diagonal is not the singleton; propagates
// MixedDiagonal from the east-set extraction.
PathSpec spec_of(const Walk& w, const Diagonals& dt);
PathSpec spec_of(const Walk& w);

struct PathRecord {
  Walk walk;
  // Absent when the terminal diagonal is the singleton (n <= 2 boards only).
  std::optional<PathSpec> spec;
};

struct EnumerationReport {
  int m = 0;
  int n = 0;
  std::string method;  // "diagonal" or "dfs"
  std::vector<PathRecord> paths;  // sorted by (start, move string)
  std::set<std::pair<Square, Square>> endpoint_pairs;
  std::set<Square> initials;
  std::set<Square> terminals;
  // A path that a single extra step would close into a hamiltonian cycle;
  // present iff the board has one (never for m,n >= 3).
  std::optional<Walk> cycle_witness;
  double elapsed_seconds = 0.0;

  int count() const { return static_cast<int>(paths.size()); }
};

struct EnumerationOptions {
  int dfs_square_cap = 36;   // maximum m*n for the exhaustive search
  int diagonal_dim_cap = 26; // maximum m+n for the diagonal method
};

// Ground-truth oracle: exhaustive backtracking over the out-degree-2 digraph
// from every start square.  Throws CapExceeded above the square cap (and
// the backtracker's hard limit of 64 squares).
EnumerationReport enumerate_dfs(const Board& b,
                                const EnumerationOptions& opts = {});

// Complete enumeration through the spec coordinates: every non-singleton
// diagonal as terminal, every member as terminal square, every east image
// of a member as initial square, every east-subset of the other paired
// diagonals.  Boards with min(m,n) < 3 delegate to the exhaustive search.
EnumerationReport enumerate_diagonal(const Board& b,
                                     const EnumerationOptions& opts = {});

// Re-decodes w with every outer diagonal forced to the given direction.
// Forcing east always succeeds; forcing north succeeds iff the diagonal
// pairing subdiagonals n-1 and m-2 is not outer.
std::optional<Walk> reroute_outer(const Walk& w, Move direction);

// Shared process-wide enumeration cache (exhaustive method), for sweeps
// that repeatedly consult the same board's path set.
const EnumerationReport& cached_enumeration(const Board& b);

}  // namespace projcb

#endif
