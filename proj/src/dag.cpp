#include "timecat/dag.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>

namespace timecat {

std::size_t DepDAG::index(const std::string& name) const {
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (nodes[i].name == name) return i;
  throw Error(ErrorCode::kUnknownName, "no node named " + name);
}

namespace {

void finish(DepDAG& g) {
  std::sort(g.edges.begin(), g.edges.end());
  g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
}

class DiagramTracer {
 public:
  explicit DiagramTracer(DepDAG& g) : g_(g) {}

  using Wires = std::vector<std::optional<std::size_t>>;  // producing node per wire

  Wires trace(const Diagram& d, const Wires& in) {
    switch (d.kind()) {
      case Diagram::Kind::kGen: {
        const Generator& gen = d.generator();
        const int n = ++used_[gen.name];
        const std::size_t id = g_.nodes.size();
        g_.nodes.push_back({n == 1 ? gen.name : gen.name + "#" + std::to_string(n), gen.name, gen.time});
        for (const auto& w : in)
          if (w) g_.edges.emplace_back(*w, id);
        return Wires(gen.outputs.size(), id);
      }
      case Diagram::Kind::kId:
      case Diagram::Kind::kRegrade:
      case Diagram::Kind::kUnitI:
        return d.kind() == Diagram::Kind::kRegrade ? trace(d.left(), in) : in;
      case Diagram::Kind::kSym:
        return {in[1], in[0]};
      case Diagram::Kind::kSeq:
        return trace(d.right(), trace(d.left(), in));
      case Diagram::Kind::kPar: {
        const auto k = static_cast<std::ptrdiff_t>(d.left().dom().size());
        Wires out = trace(d.left(), Wires(in.begin(), in.begin() + k));
        const Wires rest = trace(d.right(), Wires(in.begin() + k, in.end()));
        out.insert(out.end(), rest.begin(), rest.end());
        return out;
      }
    }
    return {};
  }

 private:
  DepDAG& g_;
  std::map<std::string, int> used_;
};

}  // namespace

DepDAG to_dag(const Diagram& d) {
  typecheck(d);
  DepDAG g;
  DiagramTracer(g).trace(d, DiagramTracer::Wires(d.dom().size()));
  finish(g);
  return g;
}

DepDAG to_dag(const DoubleSignature& s, const Tiling& t) {
  const auto links = wire_links(s, t);
  const std::size_t n = t.tiles.size();
  // Pass-through tiles map an east port to the west port it continues.
  std::vector<std::optional<std::function<std::size_t(std::size_t)>>> through(n);
  std::vector<std::optional<std::size_t>> node(n);
  DepDAG g;
  for (std::size_t i = 0; i < n; ++i) {
    const Tile& tile = t.tiles[i];
    switch (tile.kind) {
      case TileKind::kGap:
        break;
      case TileKind::kRelane:
        through[i] = [](std::size_t p) { return p; };
        break;
      case TileKind::kNested:
        node[i] = g.nodes.size();
        g.nodes.push_back({tile.name, tile.name, Grade(static_cast<std::uint64_t>(tile.rect.width()))});
        break;
      case TileKind::kCell: {
        const CellGen* cell = s.find_cell(tile.cell);
        if (!cell) throw Error(ErrorCode::kUnknownName, "tile " + tile.name + " uses unknown cell " + tile.cell);
        if (cell->kind == CellKind::kWait) {
          through[i] = [](std::size_t p) { return p; };
        } else if (cell->kind == CellKind::kBraid) {
          through[i] = [](std::size_t p) { return 1 - p; };
        } else {
          node[i] = g.nodes.size();
          g.nodes.push_back({tile.name, tile.cell, Grade(static_cast<std::uint64_t>(cell->boundary.h.size()))});
        }
        break;
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!node[i]) continue;
    for (PortLink link : links[i]) {
      while (link.tile && through[*link.tile]) link = links[*link.tile][(*through[*link.tile])(link.port)];
      if (link.tile && node[*link.tile]) g.edges.emplace_back(*node[*link.tile], *node[i]);
    }
  }
  finish(g);
  return g;
}

namespace {

std::vector<std::vector<std::size_t>> predecessors(const DepDAG& g) {
  std::vector<std::vector<std::size_t>> pred(g.nodes.size());
  for (const auto& [a, b] : g.edges) pred[b].push_back(a);
  return pred;
}

std::vector<Grade> finish_times(const DepDAG& g) {
  const std::size_t n = g.nodes.size();
  std::vector<std::size_t> indeg(n, 0);
  std::vector<std::vector<std::size_t>> succ(n);
  for (const auto& [a, b] : g.edges) {
    succ[a].push_back(b);
    ++indeg[b];
  }
  std::vector<Grade> start(n, kZero), end(n);
  std::vector<std::size_t> ready;
  for (std::size_t i = 0; i < n; ++i)
    if (indeg[i] == 0) ready.push_back(i);
  std::size_t seen = 0;
  while (!ready.empty()) {
    const std::size_t v = ready.back();
    ready.pop_back();
    ++seen;
    end[v] = seq_grade(start[v], g.nodes[v].duration);
    for (auto w : succ[v]) {
      start[w] = par_grade(start[w], end[v]);
      if (--indeg[w] == 0) ready.push_back(w);
    }
  }
  if (seen != n) throw Error(ErrorCode::kCycle, "dependency graph has a cycle");
  return end;
}

}  // namespace

Grade makespan_dp(const DepDAG& g) {
  Grade best = kZero;
  for (const auto& e : finish_times(g)) best = par_grade(best, e);
  return best;
}

Grade makespan_paths(const DepDAG& g) {
  const std::size_t n = g.nodes.size();
  std::vector<std::vector<std::size_t>> succ(n);
  for (const auto& [a, b] : g.edges) succ[a].push_back(b);
  const auto pred = predecessors(g);
  std::vector<bool> on_path(n, false);
  Grade best = kZero;
  std::function<void(std::size_t, const Grade&)> walk = [&](std::size_t v, const Grade& before) {
    if (on_path[v]) throw Error(ErrorCode::kCycle, "dependency graph has a cycle through " + g.nodes[v].name);
    on_path[v] = true;
    const Grade here = seq_grade(before, g.nodes[v].duration);
    if (succ[v].empty()) best = par_grade(best, here);
    for (auto w : succ[v]) walk(w, here);
    on_path[v] = false;
  };
  bool any_source = false;
  for (std::size_t v = 0; v < n; ++v)
    if (pred[v].empty()) {
      any_source = true;
      walk(v, kZero);
    }
  if (n > 0 && !any_source) throw Error(ErrorCode::kCycle, "dependency graph has a cycle");
  return best;
}

Grade makespan(const DepDAG& g) {
  const Grade a = makespan_dp(g);
  const Grade b = makespan_paths(g);
  if (a != b) throw std::logic_error("makespan disagreement: " + a.str() + " vs " + b.str());
  return a;
}

std::vector<Grade> asap_starts(const DepDAG& g) {
  const auto end = finish_times(g);
  std::vector<Grade> start;
  for (std::size_t i = 0; i < g.nodes.size(); ++i) start.push_back(monus(end[i], g.nodes[i].duration));
  return start;
}

std::string to_dot(const DepDAG& g) {
  std::string out = "digraph dag {\n  rankdir=LR;\n";
  for (const auto& v : g.nodes) out += "  \"" + v.name + "\" [label=\"" + v.name + " @" + v.duration.str() + "\"];\n";
  for (const auto& [a, b] : g.edges) out += "  \"" + g.nodes[a].name + "\" -> \"" + g.nodes[b].name + "\";\n";
  return out + "}\n";
}

}  // namespace timecat
