#include "projcb/render.hpp"

#include <sstream>

#include "json.hpp"
#include "projcb/decode.hpp"
#include "projcb/endpoints.hpp"
#include "projcb/serialize.hpp"

namespace projcb {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr const char* kInitMark = "•";   // •
constexpr const char* kTermMark = "■";   // ■
constexpr const char* kShade = "▒";      // ▒
constexpr const char* kEastArrow = "→";  // →
constexpr const char* kNorthArrow = "↑"; // ↑
constexpr int kGeneratorVersion = 1;

PredicateResult endpoint_predicate(const Board& b, RenderMode mode, Square s) {
  return mode == RenderMode::Init ? initial_square(b, s)
                                  : terminal_square(b, s);
}

std::string ascii_grid(
    const Board& b,
    const std::function<std::string(Square)>& cell) {
  std::ostringstream os;
  for (int q = b.n - 1; q >= 0; --q) {
    os << (q < 10 ? " " : "") << q << " |";
    for (int p = 0; p < b.m; ++p) os << ' ' << cell({p, q});
    os << '\n';
  }
  os << "   +";
  for (int p = 0; p < b.m; ++p) os << "--";
  os << "\n    ";
  for (int p = 0; p < b.m; ++p) os << (p % 10) << ' ';
  os << '\n';
  return os.str();
}

std::string render_endpoints_ascii(const RenderSpec& spec) {
  const Board& b = spec.board;
  const char* mark = spec.mode == RenderMode::Init ? kInitMark : kTermMark;
  std::ostringstream os;
  os << b.m << "x" << b.n << " "
     << (spec.mode == RenderMode::Init ? "initial" : "terminal")
     << " squares\n";
  os << ascii_grid(b, [&](Square s) {
    return endpoint_predicate(b, spec.mode, s).matched ? mark : ".";
  });
  return os.str();
}

std::string render_endpoints_json(const RenderSpec& spec) {
  const Board& b = spec.board;
  ordered_json j;
  j["mode"] = to_string(spec.mode);
  j["m"] = b.m;
  j["n"] = b.n;
  j["squares"] = ordered_json::array();
  for (int q = 0; q < b.n; ++q)
    for (int p = 0; p < b.m; ++p) {
      auto r = endpoint_predicate(b, spec.mode, {p, q});
      if (!r.matched) continue;
      ordered_json e;
      e["p"] = p;
      e["q"] = q;
      e["clauses"] = r.clauses;
      j["squares"].push_back(e);
    }
  return j.dump() + "\n";
}

void svg_header(std::ostringstream& os, const Board& b) {
  const int cell = 20, pad = 10;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\""
     << b.m * cell + 2 * pad << "\" height=\"" << b.n * cell + 2 * pad
     << "\" data-generator-version=\"" << kGeneratorVersion << "\">\n";
}

// Pixel origin of a square: row 0 at the bottom.
std::pair<int, int> svg_origin(const Board& b, Square s) {
  const int cell = 20, pad = 10;
  return {pad + s.p * cell, pad + (b.n - 1 - s.q) * cell};
}

void svg_grid_lines(std::ostringstream& os, const Board& b) {
  const int cell = 20, pad = 10;
  for (int p = 0; p <= b.m; ++p)
    os << "<line x1=\"" << pad + p * cell << "\" y1=\"" << pad << "\" x2=\""
       << pad + p * cell << "\" y2=\"" << pad + b.n * cell
       << "\" stroke=\"#999\" stroke-width=\"1\"/>\n";
  for (int q = 0; q <= b.n; ++q)
    os << "<line x1=\"" << pad << "\" y1=\"" << pad + q * cell << "\" x2=\""
       << pad + b.m * cell << "\" y2=\"" << pad + q * cell
       << "\" stroke=\"#999\" stroke-width=\"1\"/>\n";
}

std::string render_endpoints_svg(const RenderSpec& spec) {
  const Board& b = spec.board;
  std::ostringstream os;
  svg_header(os, b);
  svg_grid_lines(os, b);
  for (int q = 0; q < b.n; ++q)
    for (int p = 0; p < b.m; ++p) {
      if (!endpoint_predicate(b, spec.mode, {p, q}).matched) continue;
      auto [x, y] = svg_origin(b, {p, q});
      if (spec.mode == RenderMode::Init)
        os << "<circle cx=\"" << x + 10 << "\" cy=\"" << y + 10
           << "\" r=\"6\" fill=\"#000\"/>\n";
      else
        os << "<rect x=\"" << x + 4 << "\" y=\"" << y + 4
           << "\" width=\"12\" height=\"12\" fill=\"#000\"/>\n";
    }
  os << "</svg>\n";
  return os.str();
}

std::string render_path_ascii(const RenderSpec& spec) {
  const Walk& w = *spec.walk;
  const Board& b = w.board;
  TravelMap tm = travel_map(w);
  Diagonals dt(b);
  const int terminal_diag = dt.id_of(tm.terminal());
  std::ostringstream os;
  os << b.m << "x" << b.n << " path from " << to_string(w.start) << " to "
     << to_string(tm.terminal()) << "\n";
  os << ascii_grid(b, [&](Square s) {
    std::string cell = dt.id_of(s) == terminal_diag ? kShade : " ";
    if (s == w.start) cell = kInitMark;
    if (s == tm.terminal()) return cell + kTermMark;
    return cell + (*tm.at(s) == Move::East ? kEastArrow : kNorthArrow);
  });
  return os.str();
}

std::string render_path_json(const RenderSpec& spec) {
  const Walk& w = *spec.walk;
  ordered_json j = ordered_json::parse(walk_to_json(w));
  ordered_json trace = ordered_json::array();
  for (Square s : realize(w)) trace.push_back({s.p, s.q});
  j["trace"] = trace;
  Diagonals dt(w.board);
  if (!dt.of(final_square(w)).singleton)
    j["spec"] = ordered_json::parse(spec_to_json(spec_of(w, dt)));
  return j.dump() + "\n";
}

std::string render_path_svg(const RenderSpec& spec) {
  const Walk& w = *spec.walk;
  const Board& b = w.board;
  Diagonals dt(b);
  Square term = final_square(w);
  const int terminal_diag = dt.id_of(term);
  std::ostringstream os;
  svg_header(os, b);
  for (int q = 0; q < b.n; ++q)
    for (int p = 0; p < b.m; ++p)
      if (dt.id_of({p, q}) == terminal_diag) {
        auto [x, y] = svg_origin(b, {p, q});
        os << "<rect x=\"" << x << "\" y=\"" << y
           << "\" width=\"20\" height=\"20\" fill=\"#ddd\"/>\n";
      }
  svg_grid_lines(os, b);
  TravelMap tm = travel_map(w);
  for (int q = 0; q < b.n; ++q)
    for (int p = 0; p < b.m; ++p) {
      Square s{p, q};
      auto mv = tm.at(s);
      if (!mv) continue;
      auto [x, y] = svg_origin(b, s);
      int cx = x + 10, cy = y + 10;
      if (*mv == Move::East)
        os << "<line x1=\"" << cx - 6 << "\" y1=\"" << cy << "\" x2=\""
           << cx + 6 << "\" y2=\"" << cy
           << "\" stroke=\"#000\" stroke-width=\"2\"/>"
           << "<path d=\"M" << cx + 6 << " " << cy << " l-4 -3 l0 6 z\"/>\n";
      else
        os << "<line x1=\"" << cx << "\" y1=\"" << cy + 6 << "\" x2=\"" << cx
           << "\" y2=\"" << cy - 6
           << "\" stroke=\"#000\" stroke-width=\"2\"/>"
           << "<path d=\"M" << cx << " " << cy - 6 << " l-3 4 l6 0 z\"/>\n";
    }
  auto [sx, sy] = svg_origin(b, w.start);
  os << "<circle cx=\"" << sx + 10 << "\" cy=\"" << sy + 10
     << "\" r=\"7\" fill=\"none\" stroke=\"#000\" stroke-width=\"2\"/>\n";
  auto [tx, ty] = svg_origin(b, term);
  os << "<rect x=\"" << tx + 3 << "\" y=\"" << ty + 3
     << "\" width=\"14\" height=\"14\" fill=\"none\" stroke=\"#000\" "
        "stroke-width=\"2\"/>\n";
  os << "</svg>\n";
  return os.str();
}

std::string render_diagonals_ascii(const RenderSpec& spec) {
  const Board& b = spec.board;
  Diagonals dt(b);
  std::ostringstream os;
  os << b.m << "x" << b.n << " diagonal layout (base-36 id, * = singleton)\n";
  os << ascii_grid(b, [&](Square s) {
    int id = dt.id_of(s);
    if (id == dt.singleton_id()) return std::string("*");
    return std::string(1, id < 10 ? static_cast<char>('0' + id)
                                  : static_cast<char>('a' + id - 10));
  });
  return os.str();
}

std::string render_diagonals_json(const RenderSpec& spec) {
  Diagonals dt(spec.board);
  ordered_json j;
  j["mode"] = "diagonals";
  j["m"] = spec.board.m;
  j["n"] = spec.board.n;
  j["diagonals"] = ordered_json::array();
  for (int id : dt.ids()) {
    const Diagonal& d = dt.at(id);
    ordered_json e;
    e["id"] = id;
    e["singleton"] = d.singleton;
    if (!d.singleton) {
      e["low"] = d.low;
      e["high"] = d.high;
    }
    ordered_json members = ordered_json::array();
    for (Square s : d.orbit) members.push_back({s.p, s.q});
    e["members"] = members;
    j["diagonals"].push_back(e);
  }
  return j.dump() + "\n";
}

}  // namespace

const char* to_string(RenderMode m) {
  switch (m) {
    case RenderMode::Init: return "init";
    case RenderMode::Term: return "term";
    case RenderMode::Path: return "path";
    default: return "diagonals";
  }
}

std::string render(const RenderSpec& spec) {
  if (spec.mode == RenderMode::Init || spec.mode == RenderMode::Term) {
    if (spec.board.n > spec.board.m)
      throw HypothesisViolation(
          "endpoint maps assume m >= n; transpose the board");
    switch (spec.format) {
      case RenderFormat::Ascii: return render_endpoints_ascii(spec);
      case RenderFormat::Json: return render_endpoints_json(spec);
      case RenderFormat::Svg: return render_endpoints_svg(spec);
    }
  }
  if (spec.mode == RenderMode::Path) {
    if (!spec.walk) throw HypothesisViolation("path rendering needs a walk");
    switch (spec.format) {
      case RenderFormat::Ascii: return render_path_ascii(spec);
      case RenderFormat::Json: return render_path_json(spec);
      case RenderFormat::Svg: return render_path_svg(spec);
    }
  }
  switch (spec.format) {
    case RenderFormat::Ascii: return render_diagonals_ascii(spec);
    case RenderFormat::Json:
    case RenderFormat::Svg: return render_diagonals_json(spec);
  }
  throw Error("unhandled render request");
}

}  // namespace projcb
