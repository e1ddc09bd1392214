#include "projcb/serialize.hpp"

#include <sstream>

#include "json.hpp"

namespace projcb {

using ordered_json = nlohmann::ordered_json;

std::string walk_to_json(const Walk& w) {
  ordered_json j;
  j["m"] = w.board.m;
  j["n"] = w.board.n;
  j["start"] = {w.start.p, w.start.q};
  j["moves"] = w.moves.str();
  return j.dump();
}

Walk walk_from_json(std::string_view text) {
  ordered_json j = ordered_json::parse(text);
  Board b(j.at("m").get<int>(), j.at("n").get<int>());
  Square start{j.at("start").at(0).get<int>(), j.at("start").at(1).get<int>()};
  if (!b.contains(start)) throw Error("start square off the board");
  return {b, start, MoveSeq(j.at("moves").get<std::string>())};
}

std::string spec_to_json(const PathSpec& spec) {
  ordered_json j;
  j["initial"] = {spec.initial.p, spec.initial.q};
  j["terminal"] = {spec.terminal.p, spec.terminal.q};
  j["east"] = spec.east;
  return j.dump();
}

std::string construction_log_to_json(const ConstructionLog& log) {
  ordered_json j;
  j["kind"] = log.kind;
  j["board"] = std::to_string(log.m) + "x" + std::to_string(log.n);
  j["params"] = log.params;
  j["literalAttempt"] = to_string(log.literal);
  j["source"] = to_string(log.source);
  return j.dump();
}

uint64_t fnv1a64(std::string_view data) {
  uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

namespace {

std::string hex64(uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, v >>= 4) out[static_cast<size_t>(i)] = digits[v & 0xf];
  return out;
}

}  // namespace

std::string pair_set_digest(const std::set<std::pair<Square, Square>>& pairs) {
  std::ostringstream os;
  for (const auto& [a, b] : pairs)
    os << a.p << ',' << a.q << "->" << b.p << ',' << b.q << ';';
  return hex64(fnv1a64(os.str()));
}

std::string square_set_digest(const std::set<Square>& squares) {
  std::ostringstream os;
  for (Square s : squares) os << s.p << ',' << s.q << ';';
  return hex64(fnv1a64(os.str()));
}

std::string report_to_lines(const EnumerationReport& report, bool count_only) {
  std::ostringstream os;
  ordered_json header;
  header["type"] = "report";
  header["version"] = 1;
  header["m"] = report.m;
  header["n"] = report.n;
  header["method"] = report.method;
  header["count"] = report.count();
  os << header.dump() << '\n';

  if (!count_only)
    for (const PathRecord& rec : report.paths)
      os << walk_to_json(rec.walk) << '\n';

  ordered_json footer;
  footer["type"] = "footer";
  footer["endpoint_digest"] = pair_set_digest(report.endpoint_pairs);
  footer["initial_digest"] = square_set_digest(report.initials);
  footer["terminal_digest"] = square_set_digest(report.terminals);
  if (report.cycle_witness)
    footer["hamiltonian_cycle"] =
        "closing edge from " + to_string(final_square(*report.cycle_witness)) +
        " back to " + to_string(report.cycle_witness->start);
  os << footer.dump() << '\n';
  return os.str();
}

}  // namespace projcb
