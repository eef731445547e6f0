#pragma once

// Canonical JSON: object keys sorted, two-space indent, trailing newline.

#include <string>

#include <nlohmann/json.hpp>

#include "timecat/dag.hpp"
#include "timecat/graded.hpp"
#include "timecat/pinwheel.hpp"
#include "timecat/signature.hpp"
#include "timecat/tilted.hpp"
#include "timecat/tiling.hpp"

namespace timecat {

using Json = nlohmann::json;

/// A number when it fits in 64 bits, otherwise its decimal string.
Json grade_json(const Grade& g);
Json path_json(const Path& p);
Json polygraph_json(const TimedPolygraph& p);
/// Objects, edges and cells; maps are already name-ordered.
Json signature_json(const DoubleSignature& s);
/// {dom, cod, slices: [{left, gen, right}]}.
Json slice_term_json(const SliceTerm& t);
Json diagram_json(const Diagram& d);
/// {box, tiles, braids}; braids are listed apart from area tiles.
Json tiling_json(const DoubleSignature& s, const Tiling& t);
Json cell_json(const PinwheelCell& c);
/// Nodes carry their as-soon-as-possible start time.
Json dag_json(const DepDAG& g);

std::string canonical(const Json& j);

}  // namespace timecat
