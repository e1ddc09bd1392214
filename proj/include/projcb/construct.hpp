#ifndef PROJCB_CONSTRUCT_HPP
#define PROJCB_CONSTRUCT_HPP

#include <optional>
#include <string>

#include "projcb/decode.hpp"

namespace projcb {

// Explicit hamiltonian-path builders.  Every builder self-validates: the
// returned walk is hamiltonian, has the promised endpoints and, for the
// all-north families, an empty east-set.  For the families whose printed
// move formulas do not survive validation on all instances, the walk is
// produced through the decoder instead and the log records the discrepancy.
struct ConstructionLog {
  std::string kind;    // ha | hb | exceptional | n1 | n2 | canonical
  int m = 0;
  int n = 0;
  std::string params;
  enum class Literal { Pass, Fail, Skipped } literal = Literal::Skipped;
  enum class Source { Formula, Decoder } source = Source::Decoder;
};

struct Construction {
  Walk walk;
  ConstructionLog log;
};

// All-north path to the lower-subdiagonal target square
// (mf_minus, a - mf_minus), starting at the east image of the
// southeasternmost square of S_b, b = m+n-3-a.
// Requires m >= n >= 3, a >= mf_minus and a <= m-2 <= b.
Construction construct_ha(const Board& b, int a);

// All-north path to the upper-subdiagonal target square (mf, b - mf).
// Requires m >= n >= 3, a+b = m+n-3, a != b, a <= m-2 <= b, b <= mf+n-1.
Construction construct_hb(const Board& b, int a, int b_upper);

// All-north path from (m-2,0) to (mf-1, mf_minus-1) on the m x (m-2) board;
// requires m >= 5.
Construction construct_exceptional(int m);

// Single-row board: the walk [(p,0)](E^(m-1)).
Construction construct_n1(int m, int p);

// Two-row boards: the endpoint families of the n = 2 table.  Rows a and h-j
// take a parameter; the others are parameter-free.
enum class N2Row { A, B, C, D, E, F, G, H, I, J };

struct N2Params {
  int p = -1;
  int q = -1;
};

Construction construct_n2(int m, N2Row row, N2Params params = {});

// Decoder-backed construction from explicit spec coordinates.
std::optional<Walk> construct_canonical(const Board& b, const PathSpec& spec);

const char* to_string(ConstructionLog::Literal v);
const char* to_string(ConstructionLog::Source v);

}  // namespace projcb

#endif
