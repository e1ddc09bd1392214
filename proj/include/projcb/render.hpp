#ifndef PROJCB_RENDER_HPP
#define PROJCB_RENDER_HPP

#include <optional>
#include <string>

#include "projcb/walk.hpp"

namespace projcb {

enum class RenderMode { Init, Term, Path, DiagonalLayout };
enum class RenderFormat { Ascii, Json, Svg };

// Rendering request.  Grid orientation follows the travel directions:
// columns p grow eastward, rows q grow northward, so row 0 is drawn at the
// bottom.  Init/Term modes require m >= n; Path mode requires a walk.
struct RenderSpec {
  RenderMode mode = RenderMode::Init;
  RenderFormat format = RenderFormat::Ascii;
  Board board{1, 1};
  std::optional<Walk> walk;
};

// Deterministic: identical specs render to identical bytes (the svg output
// declares its generator version in an attribute).
std::string render(const RenderSpec& spec);

const char* to_string(RenderMode m);

}  // namespace projcb

#endif
