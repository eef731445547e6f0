#include "timecat/tiling.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "timecat/error.hpp"

namespace timecat {

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) throw Error(ErrorCode::kInvalidArgument, "zero denominator");
  if (d < 0) n = -n, d = -d;
  const std::int64_t g = std::gcd(n < 0 ? -n : n, d);
  num = g ? n / g : 0;
  den = g ? d / g : 1;
}

std::string Rational::str() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

Tile make_cell_tile(std::string name, std::string cell, Rect rect) {
  Tile t;
  t.name = std::move(name);
  t.cell = std::move(cell);
  t.rect = rect;
  return t;
}

Tile make_braid_tile(std::int64_t col, std::int64_t lane, const std::string& a, const std::string& b) {
  return make_cell_tile("braid@" + std::to_string(col) + ":" + std::to_string(lane), braid_cell_name(a, b),
                        Rect{col, col, lane, lane + 2});
}

namespace {

Path to_path(const std::vector<Wire>& wires) {
  return wires.empty() ? Path("*") : Path::of(wires);
}

struct Resolved {
  CellBoundary boundary;
  SliceTerm body;
};

Resolved resolve_tile(const DoubleSignature& s, const Tile& t) {
  switch (t.kind) {
    case TileKind::kCell: {
      const CellGen* cell = s.find_cell(t.cell);
      if (!cell) throw Error(ErrorCode::kUnknownName, "tile " + t.name + " uses unknown cell " + t.cell);
      return {cell->boundary, single_slice_term(tilt_cell(*cell))};
    }
    case TileKind::kGap: {
      const Path h = time_path(static_cast<std::size_t>(std::max<std::int64_t>(t.rect.width(), 0)));
      return {{Path("*"), h, h, Path("*")}, identity_term(h)};
    }
    case TileKind::kRelane: {
      const Path& p = t.passthrough;
      return {{p, Path(p.target()), Path(p.source()), p}, identity_term(p)};
    }
    case TileKind::kNested:
      if (!t.nested) throw Error(ErrorCode::kInvalidArgument, "nested tile " + t.name + " has no cell");
      return {t.nested->boundary, t.nested->body};
  }
  throw Error(ErrorCode::kInvalidArgument, "bad tile kind");
}

std::vector<Interval> derive_ports(const Tiling& t, std::size_t i, bool west, std::size_t arity) {
  const Tile& tile = t.tiles[i];
  const Rect& r = tile.rect;
  const std::int64_t x = west ? r.x0 : r.x1;
  if (arity == 0) return {};
  std::set<std::int64_t> cuts{r.y0, r.y1};
  for (std::size_t j = 0; j < t.tiles.size(); ++j) {
    if (j == i) continue;
    const Rect& o = t.tiles[j].rect;
    const bool touches = t.tiles[j].zero_width() ? o.x0 == x : (west ? o.x1 == x : o.x0 == x);
    if (!touches) continue;
    for (auto y : {o.y0, o.y1})
      if (y > r.y0 && y < r.y1) cuts.insert(y);
  }
  std::vector<Interval> out;
  if (cuts.size() - 1 == arity) {
    for (auto it = cuts.begin(); std::next(it) != cuts.end(); ++it) out.push_back({Rational(*it), Rational(*std::next(it))});
    return out;
  }
  const auto n = static_cast<std::int64_t>(arity);
  const std::int64_t h = r.height();
  for (std::int64_t k = 0; k < n; ++k)
    out.push_back({Rational(r.y0 * n + k * h, n), Rational(r.y0 * n + (k + 1) * h, n)});
  return out;
}

void check_ports(const Tile& tile, const std::vector<Interval>& ports, std::size_t arity, const char* side) {
  if (ports.size() != arity)
    throw Error(ErrorCode::kOverlapOrGap, "tile " + tile.name + " has " + std::to_string(ports.size()) + " " + side +
                                              " ports for " + std::to_string(arity) + " wires");
  for (std::size_t k = 0; k < ports.size(); ++k) {
    const auto& p = ports[k];
    if (!(p.lo < p.hi) || p.lo < Rational(tile.rect.y0) || Rational(tile.rect.y1) < p.hi ||
        (k > 0 && p.lo < ports[k - 1].hi))
      throw Error(ErrorCode::kOverlapOrGap, "tile " + tile.name + " has malformed " + side + " ports");
  }
}

// Edge segment on the boundary between tiles. Vertical segments carry an
// object wire over a port interval; `stage` orders the zero-width tiles that
// share a vertical line. Horizontal segments are one time column.
struct Key {
  bool vertical = true;
  std::int64_t line = 0;
  int stage = 0;
  Rational a, b;

  auto operator<=>(const Key&) const = default;
  bool operator==(const Key&) const = default;
};

Key hkey(std::int64_t y, std::int64_t col) { return Key{false, y, 0, Rational(col), Rational(col + 1)}; }

struct Layout {
  std::vector<Resolved> resolved;
  std::vector<ResolvedPorts> ports;
  std::vector<std::vector<Key>> need, produce;
  std::vector<std::vector<Wire>> need_labels, produce_labels;
  std::vector<Key> initial, target;
  std::vector<Wire> initial_labels, target_labels;
  std::vector<Wire> u, h, k, v;
};

void check_geometry(const Tiling& t) {
  if (t.width < 0 || t.height < 0) throw Error(ErrorCode::kOverlapOrGap, "negative box size");
  std::int64_t area = 0;
  for (std::size_t i = 0; i < t.tiles.size(); ++i) {
    const Tile& a = t.tiles[i];
    const Rect& r = a.rect;
    if (r.x0 < 0 || r.y0 < 0 || r.x1 > t.width || r.y1 > t.height || r.x0 > r.x1 || r.y0 >= r.y1)
      throw Error(ErrorCode::kOverlapOrGap, "tile " + a.name + " is degenerate or outside the box");
    if (a.kind == TileKind::kRelane && !a.zero_width())
      throw Error(ErrorCode::kOverlapOrGap, "relane tile " + a.name + " must have zero width");
    if (a.kind == TileKind::kGap && a.zero_width())
      throw Error(ErrorCode::kOverlapOrGap, "gap tile " + a.name + " must have positive width");
    if (a.zero_width()) continue;
    area += r.width() * r.height();
    for (std::size_t j = 0; j < i; ++j) {
      const Tile& b = t.tiles[j];
      if (b.zero_width()) continue;
      const Rect& o = b.rect;
      if (r.x0 < o.x1 && o.x0 < r.x1 && r.y0 < o.y1 && o.y0 < r.y1)
        throw Error(ErrorCode::kOverlapOrGap, "tiles " + b.name + " and " + a.name + " overlap");
    }
  }
  if (area != t.width * t.height)
    throw Error(ErrorCode::kOverlapOrGap, "tiles cover area " + std::to_string(area) + " of a " +
                                              std::to_string(t.width) + "x" + std::to_string(t.height) + " box");
}

Layout analyze(const DoubleSignature& s, const Tiling& t) {
  check_geometry(t);
  Layout L;
  const std::size_t n = t.tiles.size();
  for (const auto& tile : t.tiles) {
    Resolved r = resolve_tile(s, tile);
    const auto w = static_cast<std::size_t>(tile.rect.width());
    if (r.boundary.h.size() != w || r.boundary.k.size() != w)
      throw Error(ErrorCode::kSkewCell, "tile " + tile.name + " has width " + std::to_string(w) +
                                            " but its cell spans " + std::to_string(r.boundary.h.size()) + "/" +
                                            std::to_string(r.boundary.k.size()) + " time units");
    L.resolved.push_back(std::move(r));
  }
  L.ports.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Tile& tile = t.tiles[i];
    const auto nu = L.resolved[i].boundary.u.size(), nv = L.resolved[i].boundary.v.size();
    L.ports[i].west = tile.west_ports ? *tile.west_ports : derive_ports(t, i, true, nu);
    L.ports[i].east = tile.east_ports ? *tile.east_ports : derive_ports(t, i, false, nv);
    check_ports(tile, L.ports[i].west, nu, "west");
    check_ports(tile, L.ports[i].east, nv, "east");
    if (tile.zero_width() && nu == 0)
      throw Error(ErrorCode::kOverlapOrGap, "zero-width tile " + tile.name + " has no inputs to anchor it");
  }

  std::vector<int> stage(n, 0);
  std::map<std::int64_t, int> count;
  for (std::size_t i = 0; i < n; ++i)
    if (t.tiles[i].zero_width()) stage[i] = ++count[t.tiles[i].rect.x0];

  L.need.resize(n);
  L.produce.resize(n);
  L.need_labels.resize(n);
  L.produce_labels.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Tile& tile = t.tiles[i];
    const Rect& r = tile.rect;
    const CellBoundary& b = L.resolved[i].boundary;
    for (std::size_t p = 0; p < L.ports[i].west.size(); ++p) {
      const Interval& iv = L.ports[i].west[p];
      int st = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i || !t.tiles[j].zero_width() || t.tiles[j].rect.x0 != r.x0) continue;
        if (tile.zero_width() && j > i) continue;
        const auto& east = L.ports[j].east;
        if (std::find(east.begin(), east.end(), iv) != east.end()) st = std::max(st, stage[j]);
      }
      L.need[i].push_back(Key{true, r.x0, st, iv.lo, iv.hi});
      L.need_labels[i].push_back(b.u[p]);
    }
    for (std::int64_t c = r.x0; c < r.x1; ++c) {
      L.need[i].push_back(hkey(r.y1, c));
      L.need_labels[i].push_back(b.h[static_cast<std::size_t>(c - r.x0)]);
    }
    for (std::int64_t c = r.x0; c < r.x1; ++c) {
      L.produce[i].push_back(hkey(r.y0, c));
      L.produce_labels[i].push_back(b.k[static_cast<std::size_t>(c - r.x0)]);
    }
    for (std::size_t p = 0; p < L.ports[i].east.size(); ++p) {
      const Interval& iv = L.ports[i].east[p];
      L.produce[i].push_back(Key{true, r.x1, stage[i], iv.lo, iv.hi});
      L.produce_labels[i].push_back(b.v[p]);
    }
  }

  std::map<Key, Wire> needed, produced;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < L.need[i].size(); ++j)
      if (!needed.emplace(L.need[i][j], L.need_labels[i][j]).second)
        throw Error(ErrorCode::kOverlapOrGap, "edge segment consumed twice (tile " + t.tiles[i].name + ")");
    for (std::size_t j = 0; j < L.produce[i].size(); ++j)
      if (!produced.emplace(L.produce[i][j], L.produce_labels[i][j]).second)
        throw Error(ErrorCode::kOverlapOrGap, "edge segment produced twice (tile " + t.tiles[i].name + ")");
  }
  std::vector<std::pair<Key, Wire>> left, right;
  for (const auto& [key, label] : needed) {
    auto it = produced.find(key);
    if (it != produced.end()) {
      if (!(it->second == label))
        throw Error(ErrorCode::kBoundaryMismatch,
                    "edge segment carries " + it->second.name + " on one side and " + label.name + " on the other");
      continue;
    }
    if (key.vertical && key.line == 0 && key.stage == 0)
      left.emplace_back(key, label);
    else if (!key.vertical && key.line == t.height)
      ;
    else
      throw Error(ErrorCode::kOverlapOrGap, "unmatched edge segment at line " + std::to_string(key.line) + " [" +
                                                key.a.str() + ", " + key.b.str() + "]");
  }
  for (const auto& [key, label] : produced) {
    if (needed.count(key)) continue;
    if (key.vertical && key.line == t.width)
      right.emplace_back(key, label);
    else if (!key.vertical && key.line == 0)
      ;
    else
      throw Error(ErrorCode::kOverlapOrGap, "unmatched edge segment at line " + std::to_string(key.line) + " [" +
                                                key.a.str() + ", " + key.b.str() + "]");
  }
  auto by_y = [](const auto& p, const auto& q) { return std::tie(p.first.a, p.first.stage) < std::tie(q.first.a, q.first.stage); };
  std::sort(left.begin(), left.end(), by_y);
  std::sort(right.begin(), right.end(), by_y);
  for (const auto& [key, label] : left) {
    L.initial.push_back(key);
    L.u.push_back(label);
  }
  for (const auto& [key, label] : right) L.v.push_back(label);
  for (std::int64_t c = 0; c < t.width; ++c) {
    const Key bottom = hkey(t.height, c);
    L.initial.push_back(bottom);
    auto it = needed.find(bottom);
    L.h.push_back(it != needed.end() ? it->second : hwire(kTimeEdge));
    const Key top = hkey(0, c);
    L.target.push_back(top);
    auto jt = produced.find(top);
    L.k.push_back(jt != produced.end() ? jt->second : hwire(kTimeEdge));
  }
  for (const auto& [key, label] : right) L.target.push_back(key);
  L.initial_labels = L.u;
  L.initial_labels.insert(L.initial_labels.end(), L.h.begin(), L.h.end());
  L.target_labels = L.k;
  L.target_labels.insert(L.target_labels.end(), L.v.begin(), L.v.end());
  return L;
}

}  // namespace

std::vector<ResolvedPorts> resolve_ports(const DoubleSignature& s, const Tiling& t) { return analyze(s, t).ports; }

CellBoundary tile_boundary(const DoubleSignature& s, const Tile& t) { return resolve_tile(s, t).boundary; }

void validate_tiling(const DoubleSignature& s, const Tiling& t) { analyze(s, t); }

SweepResult sweep_tiling(const DoubleSignature& s, const Tiling& t) {
  const Layout L = analyze(s, t);
  std::vector<Key> frontier = L.initial;
  std::vector<Wire> labels = L.initial_labels;
  std::vector<bool> done(t.tiles.size(), false);
  std::vector<Slice> slices;
  std::vector<std::string> order;
  for (std::size_t step = 0; step < t.tiles.size(); ++step) {
    std::map<Key, std::size_t> index;
    for (std::size_t p = 0; p < frontier.size(); ++p) index.emplace(frontier[p], p);
    std::optional<std::pair<std::size_t, std::size_t>> best;  // (start, tile)
    for (std::size_t i = 0; i < t.tiles.size(); ++i) {
      if (done[i]) continue;
      const auto& need = L.need[i];
      auto it = index.find(need.front());
      if (it == index.end()) continue;
      const std::size_t start = it->second;
      bool ok = start + need.size() <= frontier.size();
      for (std::size_t j = 0; ok && j < need.size(); ++j) ok = frontier[start + j] == need[j];
      if (ok && (!best || start < best->first)) best = std::pair{start, i};
    }
    if (!best) {
      std::string stuck;
      for (std::size_t i = 0; i < t.tiles.size(); ++i)
        if (!done[i]) stuck += (stuck.empty() ? "" : ", ") + t.tiles[i].name;
      throw Error(ErrorCode::kNonSweepable, "no tile is ready; remaining: " + stuck);
    }
    const auto [start, i] = *best;
    const std::size_t len = L.need[i].size();
    const Path left = to_path({labels.begin(), labels.begin() + static_cast<std::ptrdiff_t>(start)});
    const Path right = to_path({labels.begin() + static_cast<std::ptrdiff_t>(start + len), labels.end()});
    const SliceTerm placed = whisker(L.resolved[i].body, left, right);
    slices.insert(slices.end(), placed.slices().begin(), placed.slices().end());
    frontier.erase(frontier.begin() + static_cast<std::ptrdiff_t>(start),
                   frontier.begin() + static_cast<std::ptrdiff_t>(start + len));
    frontier.insert(frontier.begin() + static_cast<std::ptrdiff_t>(start), L.produce[i].begin(), L.produce[i].end());
    labels.erase(labels.begin() + static_cast<std::ptrdiff_t>(start),
                 labels.begin() + static_cast<std::ptrdiff_t>(start + len));
    labels.insert(labels.begin() + static_cast<std::ptrdiff_t>(start), L.produce_labels[i].begin(),
                  L.produce_labels[i].end());
    done[i] = true;
    order.push_back(t.tiles[i].name);
  }
  if (frontier != L.target) throw Error(ErrorCode::kNonSweepable, "sweep does not end on the top and right boundary");
  CellBoundary b{to_path(L.u), to_path(L.h), to_path(L.k), to_path(L.v)};
  SliceTerm body(to_path(L.initial_labels), to_path(L.target_labels), std::move(slices));
  return {PinwheelCell::make(std::move(b), std::move(body)), std::move(order)};
}

PinwheelCell assemble_tiling(const DoubleSignature& s, const Tiling& t) { return sweep_tiling(s, t).cell; }

std::vector<std::vector<PortLink>> wire_links(const DoubleSignature& s, const Tiling& t) {
  const Layout L = analyze(s, t);
  std::map<Key, PortLink> producer;
  for (std::size_t i = 0; i < t.tiles.size(); ++i) {
    const auto w = static_cast<std::size_t>(t.tiles[i].rect.width());
    for (std::size_t p = 0; p < L.ports[i].east.size(); ++p) producer[L.produce[i][w + p]] = PortLink{i, p};
  }
  std::vector<std::vector<PortLink>> links(t.tiles.size());
  for (std::size_t i = 0; i < t.tiles.size(); ++i)
    for (std::size_t p = 0; p < L.ports[i].west.size(); ++p) {
      auto it = producer.find(L.need[i][p]);
      links[i].push_back(it != producer.end() ? it->second : PortLink{});
    }
  return links;
}

namespace {

class Guillotine {
 public:
  explicit Guillotine(const Tiling& t) : t_(t) {}

  bool composable(const std::vector<std::size_t>& items) {
    if (items.size() <= 1) return true;
    if (auto it = memo_.find(items); it != memo_.end()) return it->second;
    const bool result = try_vertical(items) || try_horizontal(items);
    memo_.emplace(items, result);
    return result;
  }

 private:
  const Rect& rect(std::size_t i) const { return t_.tiles[i].rect; }

  bool try_vertical(const std::vector<std::size_t>& items) {
    std::set<std::int64_t> lines;
    for (auto i : items) lines.insert({rect(i).x0, rect(i).x1});
    for (auto c : lines) {
      std::vector<std::size_t> left, right, on_line;
      bool crossed = false;
      for (auto i : items) {
        const Rect& r = rect(i);
        if (r.x0 < c && c < r.x1) crossed = true;
        else if (r.x0 == c && r.x1 == c) on_line.push_back(i);
        else if (r.x1 <= c) left.push_back(i);
        else right.push_back(i);
      }
      if (crossed) continue;
      for (std::size_t k = 0; k <= on_line.size(); ++k) {
        std::vector<std::size_t> l = left, r = right;
        l.insert(l.end(), on_line.begin(), on_line.begin() + static_cast<std::ptrdiff_t>(k));
        r.insert(r.end(), on_line.begin() + static_cast<std::ptrdiff_t>(k), on_line.end());
        if (l.empty() || r.empty()) continue;
        std::sort(l.begin(), l.end());
        std::sort(r.begin(), r.end());
        if (composable(l) && composable(r)) return true;
      }
    }
    return false;
  }

  bool try_horizontal(const std::vector<std::size_t>& items) {
    std::set<std::int64_t> lines;
    for (auto i : items) lines.insert({rect(i).y0, rect(i).y1});
    for (auto c : lines) {
      std::vector<std::size_t> top, bottom;
      bool crossed = false;
      for (auto i : items) {
        const Rect& r = rect(i);
        if (r.y0 < c && c < r.y1) crossed = true;
        else if (r.y1 <= c) top.push_back(i);
        else bottom.push_back(i);
      }
      if (crossed || top.empty() || bottom.empty()) continue;
      if (composable(top) && composable(bottom)) return true;
    }
    return false;
  }

  const Tiling& t_;
  std::map<std::vector<std::size_t>, bool> memo_;
};

}  // namespace

bool is_binary_composable(const DoubleSignature& s, const Tiling& t) {
  validate_tiling(s, t);
  std::vector<std::size_t> items(t.tiles.size());
  std::iota(items.begin(), items.end(), 0);
  return Guillotine(t).composable(items);
}

}  // namespace timecat
