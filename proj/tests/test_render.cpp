#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "json.hpp"
#include "projcb/endpoints.hpp"
#include "projcb/render.hpp"

using namespace projcb;

namespace {

std::set<Square> squares_of_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  std::set<Square> out;
  for (const auto& e : j.at("squares"))
    out.insert({e.at("p").get<int>(), e.at("q").get<int>()});
  return out;
}

}  // namespace

TEST_CASE("json maps carry exactly the predicate squares") {
  for (auto mode : {RenderMode::Init, RenderMode::Term}) {
    RenderSpec spec{mode, RenderFormat::Json, Board(3, 3), {}};
    auto got = squares_of_json(render(spec));
    CHECK(got.size() == 7);
    CHECK_FALSE(got.count({0, 0}));
    CHECK_FALSE(got.count({2, 2}));
  }
  RenderSpec wide{RenderMode::Init, RenderFormat::Json, Board(12, 5), {}};
  auto got = squares_of_json(render(wide));
  Board b(12, 5);
  std::set<Square> want;
  for (int q = 0; q < 5; ++q)
    for (int p = 0; p < 12; ++p)
      if (initial_square(b, {p, q}).matched) want.insert({p, q});
  CHECK(got == want);
}

TEST_CASE("rendering is deterministic") {
  for (auto fmt : {RenderFormat::Ascii, RenderFormat::Json, RenderFormat::Svg}) {
    RenderSpec spec{RenderMode::Term, fmt, Board(7, 5), {}};
    CHECK(render(spec) == render(spec));
  }
}

TEST_CASE("ascii maps place markers at predicate squares") {
  RenderSpec spec{RenderMode::Init, RenderFormat::Ascii, Board(3, 3), {}};
  std::string out = render(spec);
  // seven markers, two empty cells
  size_t markers = 0;
  for (size_t pos = out.find("•"); pos != std::string::npos;
       pos = out.find("•", pos + 1))
    ++markers;
  CHECK(markers == 7);
}

TEST_CASE("wide boards are rejected in portrait orientation") {
  RenderSpec spec{RenderMode::Init, RenderFormat::Ascii, Board(3, 5), {}};
  CHECK_THROWS_WITH_AS(render(spec),
                       "endpoint maps assume m >= n; transpose the board",
                       HypothesisViolation);
}

TEST_CASE("path rendering shades the terminal diagonal") {
  Walk w{Board(3, 3), {0, 2}, MoveSeq("NNNNNENN")};
  RenderSpec spec{RenderMode::Path, RenderFormat::Ascii, w.board, w};
  std::string out = render(spec);
  CHECK(out.find("■") != std::string::npos);  // terminal marker
  CHECK(out.find("•") != std::string::npos);  // initial marker
  CHECK(out.find("▒") != std::string::npos);  // shading
  CHECK(out.find("→") != std::string::npos);  // east move
  RenderSpec missing{RenderMode::Path, RenderFormat::Ascii, w.board, {}};
  CHECK_THROWS_AS(render(missing), HypothesisViolation);
}

TEST_CASE("svg output declares its generator version") {
  RenderSpec spec{RenderMode::Init, RenderFormat::Svg, Board(5, 5), {}};
  std::string svg = render(spec);
  CHECK(svg.find("data-generator-version=\"") != std::string::npos);
  CHECK(svg.rfind("<svg", 0) == 0);

  Walk w{Board(3, 3), {0, 2}, MoveSeq("NNNNNENN")};
  RenderSpec path{RenderMode::Path, RenderFormat::Svg, w.board, w};
  CHECK(render(path).find("</svg>") != std::string::npos);
}

TEST_CASE("diagonal layout") {
  RenderSpec spec{RenderMode::DiagonalLayout, RenderFormat::Ascii, Board(4, 3),
                  {}};
  std::string out = render(spec);
  CHECK(out.find('*') != std::string::npos);  // singleton cell
  RenderSpec js{RenderMode::DiagonalLayout, RenderFormat::Json, Board(4, 3),
                {}};
  auto j = nlohmann::json::parse(render(js));
  CHECK(j.at("diagonals").size() == 4);  // ids 0, 1, 2 and the singleton
}
