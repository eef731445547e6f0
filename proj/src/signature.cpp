#include "timecat/signature.hpp"

#include <algorithm>

#include "timecat/error.hpp"

namespace timecat {

const Generator* TimedPolygraph::find(const std::string& name) const {
  for (const auto& g : generators)
    if (g.name == name) return &g;
  return nullptr;
}

bool TimedPolygraph::has_object(const std::string& name) const {
  return std::find(objects.begin(), objects.end(), name) != objects.end();
}

std::vector<std::string> validate_polygraph(const TimedPolygraph& p) {
  std::vector<std::string> errors;
  std::set<std::string> seen_objects;
  for (const auto& o : p.objects)
    if (!seen_objects.insert(o).second) errors.push_back("duplicate object " + o);
  std::set<std::string> seen;
  for (const auto& g : p.generators) {
    if (!seen.insert(g.name).second) errors.push_back("duplicate generator " + g.name);
    for (const auto* side : {&g.inputs, &g.outputs})
      for (const auto& o : *side)
        if (!seen_objects.count(o)) errors.push_back("unknown object " + o + " in generator " + g.name);
  }
  return errors;
}

std::string CellBoundary::composability_error() const {
  if (!u.all_of_kind(EdgeKind::kVertical) || !v.all_of_kind(EdgeKind::kVertical))
    return "left/right boundary must consist of vertical edges";
  if (!h.all_of_kind(EdgeKind::kHorizontal) || !k.all_of_kind(EdgeKind::kHorizontal))
    return "top/bottom boundary must consist of horizontal edges";
  if (h.source() != u.target()) return "bottom boundary does not start where the left one ends";
  if (k.source() != u.source()) return "top boundary does not start where the left one starts";
  if (v.source() != k.target()) return "right boundary does not start where the top one ends";
  if (v.target() != h.target()) return "right boundary does not end where the bottom one ends";
  return {};
}

std::string CellBoundary::str() const {
  return "(" + u.str() + "; " + h.str() + "; " + k.str() + "; " + v.str() + ")";
}

namespace {

void check_path_edges(const Path& p, const std::map<std::string, EdgeDecl>& edges,
                      const std::string& what, std::vector<std::string>& errors) {
  for (const auto& w : p.wires()) {
    auto it = edges.find(w.name);
    if (it == edges.end())
      errors.push_back("unknown " + what + " edge " + w.name);
    else if (it->second.src != w.src || it->second.tgt != w.tgt)
      errors.push_back(what + " edge " + w.name + " used with wrong endpoints");
  }
}

}  // namespace

void DoubleSignature::add_cell(CellGen cell) {
  if (auto err = cell.boundary.composability_error(); !err.empty())
    throw Error(ErrorCode::kBoundaryMismatch, "cell " + cell.name + ": " + err);
  if (cells_.count(cell.name)) throw Error(ErrorCode::kDuplicateName, "duplicate cell " + cell.name);
  std::string name = cell.name;
  cells_.emplace(std::move(name), std::move(cell));
}

const CellGen* DoubleSignature::find_cell(const std::string& name) const {
  auto it = cells_.find(name);
  return it == cells_.end() ? nullptr : &it->second;
}

std::vector<std::string> DoubleSignature::validate() const {
  std::vector<std::string> errors;
  for (const auto* edges : {&h_edges, &v_edges})
    for (const auto& [name, e] : *edges)
      if (!objects.count(e.src) || !objects.count(e.tgt)) errors.push_back("edge " + name + " has unknown endpoint");
  for (const auto& [name, c] : cells_) {
    if (auto err = c.boundary.composability_error(); !err.empty()) errors.push_back(name + ": " + err);
    check_path_edges(c.boundary.u, v_edges, "vertical", errors);
    check_path_edges(c.boundary.v, v_edges, "vertical", errors);
    check_path_edges(c.boundary.h, h_edges, "horizontal", errors);
    check_path_edges(c.boundary.k, h_edges, "horizontal", errors);
  }
  return errors;
}

std::string wait_cell_name(const std::string& object) { return "wait[" + object + "]"; }

std::string braid_cell_name(const std::string& a, const std::string& b) {
  return "sigma[" + a + "," + b + "]";
}

DoubleSignature draw(const TimedPolygraph& p) {
  if (auto errors = validate_polygraph(p); !errors.empty())
    throw Error(ErrorCode::kInvalidArgument, "invalid polygraph: " + errors.front());
  DoubleSignature s;
  s.objects.insert("*");
  s.h_edges.emplace(kTimeEdge, EdgeDecl{"*", "*"});
  for (const auto& o : p.objects) s.v_edges.emplace(o, EdgeDecl{"*", "*"});
  for (const auto& g : p.generators) {
    const auto t = static_cast<std::size_t>(g.time.to_int());
    s.add_cell({g.name, {vpath(g.inputs), time_path(t), time_path(t), vpath(g.outputs)}, CellKind::kGenerator});
  }
  for (const auto& x : p.objects)
    s.add_cell({wait_cell_name(x), {vpath({x}), time_path(1), time_path(1), vpath({x})}, CellKind::kWait});
  for (const auto& x : p.objects)
    for (const auto& y : p.objects)
      s.add_cell({braid_cell_name(x, y), {vpath({x, y}), time_path(0), time_path(0), vpath({y, x})},
                  CellKind::kBraid});
  return s;
}

SignatureMorphism SignatureMorphism::identity(const DoubleSignature& s) {
  SignatureMorphism m;
  for (const auto& o : s.objects) m.objects[o] = o;
  for (const auto& [n, e] : s.h_edges) m.h_edges[n] = n;
  for (const auto& [n, e] : s.v_edges) m.v_edges[n] = n;
  for (const auto& [n, c] : s.cells()) m.cells[n] = c;
  return m;
}

namespace {

const std::string& lookup(const std::map<std::string, std::string>& map, const std::string& key,
                          const char* what) {
  auto it = map.find(key);
  if (it == map.end()) throw Error(ErrorCode::kUnknownName, std::string("morphism has no image for ") + what + " " + key);
  return it->second;
}

}  // namespace

Path map_path(const SignatureMorphism& m, const Path& p) {
  std::vector<Wire> wires;
  for (const auto& w : p.wires()) {
    const auto& edges = w.kind == EdgeKind::kVertical ? m.v_edges : m.h_edges;
    wires.push_back(Wire{w.kind, lookup(edges, w.name, "edge"), lookup(m.objects, w.src, "object"),
                         lookup(m.objects, w.tgt, "object")});
  }
  return Path(lookup(m.objects, p.source(), "object"), std::move(wires));
}

DoubleSignature apply_signature_morphism(const SignatureMorphism& m, const DoubleSignature& s) {
  DoubleSignature out;
  for (const auto& o : s.objects) out.objects.insert(lookup(m.objects, o, "object"));
  auto map_edges = [&](const std::map<std::string, EdgeDecl>& src, const std::map<std::string, std::string>& f,
                       std::map<std::string, EdgeDecl>& dst) {
    for (const auto& [n, e] : src) {
      EdgeDecl img{lookup(m.objects, e.src, "object"), lookup(m.objects, e.tgt, "object")};
      const auto& name = lookup(f, n, "edge");
      auto [it, fresh] = dst.emplace(name, img);
      if (!fresh && !(it->second == img))
        throw Error(ErrorCode::kBoundaryMismatch, "edge image " + name + " has inconsistent endpoints");
    }
  };
  map_edges(s.h_edges, m.h_edges, out.h_edges);
  map_edges(s.v_edges, m.v_edges, out.v_edges);
  for (const auto& [name, cell] : s.cells()) {
    auto it = m.cells.find(name);
    if (it == m.cells.end()) throw Error(ErrorCode::kUnknownName, "morphism has no image for cell " + name);
    const CellGen& img = it->second;
    CellBoundary expected{map_path(m, cell.boundary.u), map_path(m, cell.boundary.h),
                          map_path(m, cell.boundary.k), map_path(m, cell.boundary.v)};
    if (!(img.boundary == expected))
      throw Error(ErrorCode::kBoundaryMismatch, "cell " + name + " maps to " + img.name + " at " +
                                                    img.boundary.str() + " but its image boundary is " +
                                                    expected.str());
    if (const auto* existing = out.find_cell(img.name)) {
      if (!(existing->boundary == img.boundary))
        throw Error(ErrorCode::kBoundaryMismatch, "cell image " + img.name + " used at two boundaries");
      continue;
    }
    out.add_cell(img);
  }
  return out;
}

PolygraphMorphism PolygraphMorphism::identity(const TimedPolygraph& p) {
  PolygraphMorphism m;
  for (const auto& o : p.objects) m.objects[o] = o;
  for (const auto& g : p.generators) m.generators[g.name] = g;
  return m;
}

TimedPolygraph apply_polygraph_morphism(const PolygraphMorphism& m, const TimedPolygraph& p) {
  TimedPolygraph out;
  for (const auto& o : p.objects) {
    const auto& img = lookup(m.objects, o, "object");
    if (!out.has_object(img)) out.objects.push_back(img);
  }
  auto map_objects = [&](const std::vector<std::string>& xs) {
    std::vector<std::string> ys;
    for (const auto& x : xs) ys.push_back(lookup(m.objects, x, "object"));
    return ys;
  };
  for (const auto& g : p.generators) {
    auto it = m.generators.find(g.name);
    if (it == m.generators.end()) throw Error(ErrorCode::kUnknownName, "morphism has no image for generator " + g.name);
    const Generator& img = it->second;
    if (img.time != g.time)
      throw Error(ErrorCode::kBoundaryMismatch, "generator " + g.name + " @" + g.time.str() + " maps to " +
                                                    img.name + " @" + img.time.str() + ": time not preserved");
    if (img.inputs != map_objects(g.inputs) || img.outputs != map_objects(g.outputs))
      throw Error(ErrorCode::kBoundaryMismatch, "generator " + g.name + " maps to " + img.name +
                                                    " with inputs/outputs that are not the object images");
    if (const auto* existing = out.find(img.name)) {
      if (!(*existing == img))
        throw Error(ErrorCode::kBoundaryMismatch, "generator image " + img.name + " has two definitions");
      continue;
    }
    out.generators.push_back(img);
  }
  return out;
}

SignatureMorphism draw_morphism(const PolygraphMorphism& m, const TimedPolygraph& p) {
  const TimedPolygraph img = apply_polygraph_morphism(m, p);
  const DoubleSignature target = draw(img);
  SignatureMorphism out;
  out.objects["*"] = "*";
  out.h_edges[kTimeEdge] = kTimeEdge;
  for (const auto& o : p.objects) out.v_edges[o] = m.objects.at(o);
  for (const auto& g : p.generators) out.cells[g.name] = *target.find_cell(m.generators.at(g.name).name);
  for (const auto& x : p.objects) {
    out.cells[wait_cell_name(x)] = *target.find_cell(wait_cell_name(m.objects.at(x)));
    for (const auto& y : p.objects)
      out.cells[braid_cell_name(x, y)] = *target.find_cell(braid_cell_name(m.objects.at(x), m.objects.at(y)));
  }
  return out;
}

}  // namespace timecat
