#include "timecat/serialize.hpp"

#include <limits>

namespace timecat {

Json grade_json(const Grade& g) {
  if (g.value() <= std::numeric_limits<std::uint64_t>::max()) return static_cast<std::uint64_t>(g.value());
  return g.str();
}

Json path_json(const Path& p) {
  Json out = Json::array();
  for (const auto& w : p.wires()) out.push_back(w.name);
  return out;
}

Json polygraph_json(const TimedPolygraph& p) {
  Json gens = Json::array();
  for (const auto& g : p.generators)
    gens.push_back({{"name", g.name}, {"inputs", g.inputs}, {"outputs", g.outputs}, {"time", grade_json(g.time)}});
  return {{"objects", p.objects}, {"generators", gens}};
}

Json signature_json(const DoubleSignature& s) {
  auto edges = [](const std::map<std::string, EdgeDecl>& m) {
    Json out = Json::array();
    for (const auto& [name, e] : m) out.push_back({{"name", name}, {"src", e.src}, {"tgt", e.tgt}});
    return out;
  };
  Json cells = Json::array();
  for (const auto& [name, c] : s.cells()) {
    const char* kind = c.kind == CellKind::kWait ? "wait" : c.kind == CellKind::kBraid ? "braid" : "generator";
    cells.push_back({{"name", name},
                     {"kind", kind},
                     {"u", path_json(c.boundary.u)},
                     {"h", path_json(c.boundary.h)},
                     {"k", path_json(c.boundary.k)},
                     {"v", path_json(c.boundary.v)}});
  }
  return {{"objects", s.objects}, {"h_edges", edges(s.h_edges)}, {"v_edges", edges(s.v_edges)}, {"cells", cells}};
}

Json slice_term_json(const SliceTerm& t) {
  Json slices = Json::array();
  for (const auto& sl : t.slices())
    slices.push_back({{"left", path_json(sl.left)}, {"gen", sl.gen.name}, {"right", path_json(sl.right)}});
  return {{"dom", path_json(t.dom())}, {"cod", path_json(t.cod())}, {"slices", slices}};
}

Json diagram_json(const Diagram& d) {
  using K = Diagram::Kind;
  switch (d.kind()) {
    case K::kGen:
      return {{"op", "gen"}, {"name", d.generator().name}, {"time", grade_json(d.generator().time)}};
    case K::kId:
      return {{"op", "id"}, {"objects", d.objects()}};
    case K::kSym:
      return {{"op", "swap"}, {"objects", d.objects()}};
    case K::kUnitI:
      return {{"op", "unit"}};
    case K::kSeq:
      return {{"op", "seq"}, {"args", {diagram_json(d.left()), diagram_json(d.right())}}};
    case K::kPar:
      return {{"op", "par"}, {"args", {diagram_json(d.left()), diagram_json(d.right())}}};
    case K::kRegrade:
      return {{"op", "up"}, {"grade", grade_json(d.target())}, {"args", Json::array({diagram_json(d.left())})}};
  }
  return {};
}

Json tiling_json(const DoubleSignature& s, const Tiling& t) {
  Json tiles = Json::array(), braids = Json::array();
  for (const auto& tile : t.tiles) {
    const CellGen* cell = tile.kind == TileKind::kCell ? s.find_cell(tile.cell) : nullptr;
    if (cell && cell->kind == CellKind::kBraid) {
      braids.push_back({{"col", tile.rect.x0},
                        {"lane", tile.rect.y0},
                        {"pair", {cell->boundary.u[0].name, cell->boundary.u[1].name}}});
      continue;
    }
    Json j = {{"name", tile.name}, {"x0", tile.rect.x0}, {"x1", tile.rect.x1}, {"y0", tile.rect.y0}, {"y1", tile.rect.y1}};
    switch (tile.kind) {
      case TileKind::kCell:
        j["gen"] = tile.cell;
        break;
      case TileKind::kGap:
        j["gen"] = "gap";
        break;
      case TileKind::kRelane:
        j["gen"] = "relane";
        j["wires"] = path_json(tile.passthrough);
        break;
      case TileKind::kNested:
        j["gen"] = "nested";
        if (tile.nested) j["cell"] = cell_json(*tile.nested);
        break;
    }
    tiles.push_back(std::move(j));
  }
  return {{"box", {t.width, t.height}}, {"tiles", tiles}, {"braids", braids}};
}

Json cell_json(const PinwheelCell& c) {
  Json slices = Json::array();
  for (const auto& sl : c.body.slices()) slices.push_back({{"gen", sl.gen.name}, {"offset", sl.offset()}});
  return {{"boundary", {{"u", path_json(c.u())}, {"h", path_json(c.h())}, {"k", path_json(c.k())}, {"v", path_json(c.v())}}},
          {"duration", grade_json(duration(c))},
          {"slices", slices}};
}

Json dag_json(const DepDAG& g) {
  const auto starts = asap_starts(g);
  Json nodes = Json::array(), edges = Json::array();
  for (std::size_t i = 0; i < g.nodes.size(); ++i)
    nodes.push_back({{"name", g.nodes[i].name},
                     {"generator", g.nodes[i].generator},
                     {"duration", grade_json(g.nodes[i].duration)},
                     {"start", grade_json(starts[i])}});
  for (const auto& [a, b] : g.edges) edges.push_back({g.nodes[a].name, g.nodes[b].name});
  return {{"nodes", nodes}, {"edges", edges}, {"makespan", grade_json(makespan(g))}};
}

std::string canonical(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace timecat
