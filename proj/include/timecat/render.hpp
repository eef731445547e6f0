#pragma once

// SVG string diagrams of tilings: time runs left to right in columns,
// resources are wires on lanes. Generators are boxes spanning their
// duration, waits are wire segments with a tick, braids are crossings at a
// zero-width cut.

#include <string>

#include "timecat/signature.hpp"
#include "timecat/tiling.hpp"

namespace timecat {

struct RenderSpec {
  int column_width = 64;
  int lane_height = 40;
  int margin = 28;
  int font_size = 12;
  double wire_width = 1.5;
  std::string box_fill = "#f7f1e1";
  std::string box_stroke = "#3b3b3b";
  std::string wire_stroke = "#1f4e79";
  std::string grid_stroke = "#d0d0d0";

  /// Throws Error(kInvalidArgument) for non-positive dimensions.
  void validate() const;
};

/// Deterministic SVG 1.1 document. Throws what validate_tiling throws.
std::string render_svg(const DoubleSignature& s, const Tiling& t, const RenderSpec& spec = {});

}  // namespace timecat
