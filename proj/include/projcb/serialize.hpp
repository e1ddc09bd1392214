#ifndef PROJCB_SERIALIZE_HPP
#define PROJCB_SERIALIZE_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include "projcb/construct.hpp"
#include "projcb/decode.hpp"

namespace projcb {

// Path wire format: {"m":M,"n":N,"start":[p,q],"moves":"EN..."}.
// A hamiltonian claim requires |moves| == m*n - 1.
std::string walk_to_json(const Walk& w);
Walk walk_from_json(std::string_view text);

std::string spec_to_json(const PathSpec& spec);
std::string construction_log_to_json(const ConstructionLog& log);

uint64_t fnv1a64(std::string_view data);

// Stable digests of sorted endpoint sets, for cross-run comparison.
std::string pair_set_digest(const std::set<std::pair<Square, Square>>& pairs);
std::string square_set_digest(const std::set<Square>& squares);

// Line-oriented report: a versioned header, one path JSON per line (bodies
// omitted in count-only mode), and a footer carrying the endpoint-set
// digests for cross-run comparison.
std::string report_to_lines(const EnumerationReport& report,
                            bool count_only = false);

}  // namespace projcb

#endif
