// Command-line front end: endpoint maps, path construction and decoding,
// board enumeration, and the verification suites.
//
// Exit codes: 0 success, 1 verification/construction failure, 2 usage
// error, 3 enumeration cap exceeded.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "projcb/construct.hpp"
#include "projcb/decode.hpp"
#include "projcb/endpoints.hpp"
#include "projcb/render.hpp"
#include "projcb/serialize.hpp"
#include "projcb/verify.hpp"

namespace {

using namespace projcb;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

void emit(const std::string& text, const std::string& out_file) {
  if (out_file.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_file, std::ios::binary);
  if (!f) throw Error("cannot open output file " + out_file);
  f << text;
}

std::string error_json(const char* kind, const std::string& message) {
  nlohmann::ordered_json j;
  j["error"]["kind"] = kind;
  j["error"]["message"] = message;
  return j.dump() + "\n";
}

RenderFormat parse_format(const std::string& f) {
  if (f == "ascii") return RenderFormat::Ascii;
  if (f == "json") return RenderFormat::Json;
  if (f == "svg") return RenderFormat::Svg;
  throw CLI::ValidationError("--format", "expected ascii, json or svg");
}

Square parse_square(const std::string& text) {
  std::istringstream is(text);
  int p, q;
  char comma;
  if (!(is >> p >> comma >> q) || comma != ',')
    throw Error("expected a square as p,q but got '" + text + "'");
  return {p, q};
}

std::set<int> parse_east(const std::string& text) {
  std::set<int> out;
  std::istringstream is(text);
  std::string item;
  while (std::getline(is, item, ','))
    if (!item.empty()) out.insert(std::stoi(item));
  return out;
}

struct MapArgs {
  int m = 0, n = 0;
  std::string mode = "init";
  std::string format = "ascii";
  std::string out;
};

int run_map(const MapArgs& a) {
  RenderSpec spec;
  spec.board = Board(a.m, a.n);
  spec.format = parse_format(a.format);
  if (a.mode == "init")
    spec.mode = RenderMode::Init;
  else if (a.mode == "term")
    spec.mode = RenderMode::Term;
  else if (a.mode == "diagonals")
    spec.mode = RenderMode::DiagonalLayout;
  else {
    std::cerr << "unknown map mode '" << a.mode << "'\n";
    return kExitUsage;
  }
  try {
    emit(render(spec), a.out);
  } catch (const HypothesisViolation& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

struct PathArgs {
  int m = 0, n = 0;
  int a = -1, b = -1, p = -1, q = -1;
  std::string kind;
  std::string row;
  bool from_spec = false;
  std::string init, term, east;
  std::string format = "ascii";
  std::string out;
};

int run_path(const PathArgs& a) {
  try {
    std::optional<Construction> built;
    std::optional<Walk> walk;
    if (a.from_spec) {
      if (a.init.empty() || a.term.empty()) {
        std::cerr << "--spec requires --init and --term\n";
        return kExitUsage;
      }
      Board b(a.m, a.n);
      PathSpec spec{parse_square(a.init), parse_square(a.term),
                    parse_east(a.east)};
      walk = construct_canonical(b, spec);
      if (!walk) {
        std::cout << error_json("NoSuchPath",
                                "no hamiltonian path matches the spec");
        return kExitFailure;
      }
    } else if (a.kind == "ha") {
      built = construct_ha(Board(a.m, a.n), a.a);
    } else if (a.kind == "hb") {
      built = construct_hb(Board(a.m, a.n), a.a, a.b);
    } else if (a.kind == "exceptional") {
      built = construct_exceptional(a.m);
    } else if (a.kind == "n1") {
      built = construct_n1(a.m, a.p);
    } else if (a.kind == "n2") {
      if (a.row.size() != 1 || a.row[0] < 'a' || a.row[0] > 'j') {
        std::cerr << "--row expects a letter a..j\n";
        return kExitUsage;
      }
      built = construct_n2(a.m, static_cast<N2Row>(a.row[0] - 'a'),
                           N2Params{a.p, a.q});
    } else {
      std::cerr << "select a construction with --kind or give --spec\n";
      return kExitUsage;
    }
    if (built) walk = built->walk;

    std::ostringstream os;
    if (parse_format(a.format) == RenderFormat::Ascii) {
      os << "moves: " << walk->moves.str() << "\n";
      os << "walk:  " << walk_to_json(*walk) << "\n";
      Diagonals dt(walk->board);
      if (!dt.of(final_square(*walk)).singleton)
        os << "spec:  " << spec_to_json(spec_of(*walk, dt)) << "\n";
      if (built)
        os << "log:   " << construction_log_to_json(built->log) << "\n";
      os << render(RenderSpec{RenderMode::Path, RenderFormat::Ascii,
                              walk->board, *walk});
    } else {
      os << render(RenderSpec{RenderMode::Path, parse_format(a.format),
                              walk->board, *walk});
    }
    emit(os.str(), a.out);
    return kExitOk;
  } catch (const HypothesisViolation& e) {
    std::cout << error_json("HypothesisViolation", e.what());
    return kExitFailure;
  } catch (const InvalidSpec& e) {
    std::cout << error_json("InvalidSpec", e.what());
    return kExitFailure;
  } catch (const ConstructionImpossible& e) {
    std::cout << error_json("ConstructionImpossible", e.what());
    return kExitFailure;
  } catch (const ConstructionInvalid& e) {
    std::cout << error_json("ConstructionInvalid", e.what());
    return kExitFailure;
  }
}

struct EnumerateArgs {
  int m = 0, n = 0;
  std::string method = "diagonal";
  bool count_only = false;
  int dfs_cap = 36;
  int diag_cap = 26;
  std::string out;
};

int run_enumerate(const EnumerateArgs& a) {
  EnumerationOptions opts;
  opts.dfs_square_cap = a.dfs_cap;
  opts.diagonal_dim_cap = a.diag_cap;
  try {
    Board b(a.m, a.n);
    EnumerationReport rep = a.method == "dfs" ? enumerate_dfs(b, opts)
                                              : enumerate_diagonal(b, opts);
    emit(report_to_lines(rep, a.count_only), a.out);
    return kExitOk;
  } catch (const CapExceeded& e) {
    std::cerr << e.what()
              << " (raise --dfs-cap / --diag-cap to override)\n";
    return kExitCap;
  }
}

struct VerifyArgs {
  std::string suite = "all";
  int max_m = 6;
  int max_n = 6;
};

int run_verify(const VerifyArgs& a) {
  VerifyOptions opts;
  opts.max_m = a.max_m;
  opts.max_n = a.max_n;
  auto results = run_suite(a.suite, opts);
  std::cout << format_results(results);
  return has_failures(results) ? kExitFailure : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "projcb: hamiltonian paths in projective checkerboards.\n"
      "Grid orientation: columns p grow eastward, rows q grow northward;\n"
      "maps draw row q = 0 at the bottom."};
  app.require_subcommand(1);
  app.set_config("--config");

  MapArgs map_args;
  auto* map = app.add_subcommand("map", "render an endpoint map");
  map->add_option("--m", map_args.m, "columns")->required();
  map->add_option("--n", map_args.n, "rows")->required();
  map->add_option("--mode", map_args.mode, "init | term | diagonals");
  map->add_option("--format", map_args.format, "ascii | json | svg");
  map->add_option("--out", map_args.out, "write to file instead of stdout");

  PathArgs path_args;
  auto* path = app.add_subcommand("path", "construct or decode a path");
  path->add_option("--m", path_args.m, "columns")->required();
  path->add_option("--n", path_args.n, "rows");
  path->add_option("--kind", path_args.kind,
                   "ha | hb | exceptional | n1 | n2");
  path->add_flag("--spec", path_args.from_spec,
                 "decode from --init/--term/--east instead of a family");
  path->add_option("--a", path_args.a, "lower terminal subdiagonal index");
  path->add_option("--b", path_args.b, "upper terminal subdiagonal index");
  path->add_option("--p", path_args.p, "column parameter");
  path->add_option("--q", path_args.q, "row parameter");
  path->add_option("--row", path_args.row, "two-row family row, a..j");
  path->add_option("--init", path_args.init, "initial square p,q");
  path->add_option("--term", path_args.term, "terminal square x,y");
  path->add_option("--east", path_args.east,
                   "comma-separated east diagonal ids (may be empty)");
  path->add_option("--format", path_args.format, "ascii | json | svg");
  path->add_option("--out", path_args.out, "write to file instead of stdout");

  EnumerateArgs enum_args;
  auto* enumerate = app.add_subcommand("enumerate",
                                       "list all hamiltonian paths");
  enumerate->add_option("--m", enum_args.m, "columns")->required();
  enumerate->add_option("--n", enum_args.n, "rows")->required();
  enumerate->add_option("--method", enum_args.method, "diagonal | dfs");
  enumerate->add_flag("--count-only", enum_args.count_only,
                      "omit path bodies");
  enumerate->add_option("--dfs-cap", enum_args.dfs_cap,
                        "max m*n for the exhaustive method");
  enumerate->add_option("--diag-cap", enum_args.diag_cap,
                        "max m+n for the diagonal method");
  enumerate->add_option("--out", enum_args.out,
                        "write to file instead of stdout");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", verify_args.suite,
                     "theorems | props | constructions | reductions | n12 | "
                     "all");
  verify->add_option("--max-m", verify_args.max_m,
                     "exhaustive sweep bound on m");
  verify->add_option("--max-n", verify_args.max_n,
                     "exhaustive sweep bound on n");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? kExitUsage : kExitOk;
  }

  try {
    if (*map) return run_map(map_args);
    if (*path) return run_path(path_args);
    if (*enumerate) return run_enumerate(enum_args);
    if (*verify) return run_verify(verify_args);
  } catch (const CapExceeded& e) {
    std::cerr << e.what() << "\n";
    return kExitCap;
  } catch (const HypothesisViolation& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}
