#include "timecat/render.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <optional>
#include <set>

#include "timecat/error.hpp"

namespace timecat {

void RenderSpec::validate() const {
  if (column_width <= 0 || lane_height <= 0 || margin < 0 || font_size <= 0 || wire_width <= 0)
    throw Error(ErrorCode::kInvalidArgument, "render dimensions must be positive");
}

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s = buf;
  while (s.back() == '0') s.pop_back();
  if (s.back() == '.') s.pop_back();
  return s == "-0" ? "0" : s;
}

std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

double mid(const Interval& iv) { return (iv.lo.to_double() + iv.hi.to_double()) / 2; }

class Painter {
 public:
  Painter(const RenderSpec& spec, double west, double east) : spec_(spec), west_(west), east_(east) {}

  double X(double x) const { return spec_.margin + west_ + x * spec_.column_width; }
  double Y(double y) const { return spec_.margin + y * spec_.lane_height; }

  void line(double x0, double y0, double x1, double y1, const std::string& stroke, double width,
            const std::string& extra = "") {
    body_ += "  <line x1=\"" + num(x0) + "\" y1=\"" + num(y0) + "\" x2=\"" + num(x1) + "\" y2=\"" + num(y1) +
             "\" stroke=\"" + stroke + "\" stroke-width=\"" + num(width) + "\"" + extra + "/>\n";
  }

  // Orthogonal connection between two points: across, down, across.
  void wire(double x0, double y0, double x1, double y1) {
    if (x0 == x1 && y0 == y1) return;
    if (y0 == y1 || x0 == x1) {
      line(x0, y0, x1, y1, spec_.wire_stroke, spec_.wire_width);
      return;
    }
    const double xm = (x0 + x1) / 2;
    body_ += "  <polyline points=\"" + num(x0) + "," + num(y0) + " " + num(xm) + "," + num(y0) + " " + num(xm) + "," +
             num(y1) + " " + num(x1) + "," + num(y1) + "\" fill=\"none\" stroke=\"" + spec_.wire_stroke +
             "\" stroke-width=\"" + num(spec_.wire_width) + "\"/>\n";
  }

  void rect(double x, double y, double w, double h, const std::string& extra) {
    body_ += "  <rect x=\"" + num(x) + "\" y=\"" + num(y) + "\" width=\"" + num(w) + "\" height=\"" + num(h) + "\"" +
             extra + "/>\n";
  }

  void text(double x, double y, const std::string& s, const std::string& anchor, int size) {
    body_ += "  <text x=\"" + num(x) + "\" y=\"" + num(y) + "\" font-family=\"sans-serif\" font-size=\"" +
             std::to_string(size) + "\" text-anchor=\"" + anchor + "\">" + escape(s) + "</text>\n";
  }

  std::string finish(double columns, double lanes) const {
    const double width = 2 * spec_.margin + west_ + east_ + columns * spec_.column_width;
    const double height = 2 * spec_.margin + lanes * spec_.lane_height;
    return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
           "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + num(width) + "\" height=\"" +
           num(height) + "\" viewBox=\"0 0 " + num(width) + " " + num(height) + "\">\n" +
           "  <rect x=\"0\" y=\"0\" width=\"" + num(width) + "\" height=\"" + num(height) + "\" fill=\"#ffffff\"/>\n" +
           body_ + "</svg>\n";
  }

 private:
  const RenderSpec& spec_;
  double west_, east_;
  std::string body_;
};

}  // namespace

std::string render_svg(const DoubleSignature& s, const Tiling& t, const RenderSpec& spec) {
  spec.validate();
  const auto ports = resolve_ports(s, t);
  const auto links = wire_links(s, t);
  constexpr double kInset = 8, kBrace = 6, kSpread = 14;

  // Boundary labels sit in gutters outside the grid.
  std::set<std::pair<std::size_t, std::size_t>> consumed;
  std::size_t west_chars = 0, east_chars = 0;
  for (std::size_t i = 0; i < t.tiles.size(); ++i) {
    const CellBoundary b = tile_boundary(s, t.tiles[i]);
    for (std::size_t q = 0; q < links[i].size(); ++q)
      if (links[i][q].tile) consumed.emplace(*links[i][q].tile, links[i][q].port);
      else west_chars = std::max(west_chars, b.u[q].name.size());
  }
  for (std::size_t i = 0; i < t.tiles.size(); ++i) {
    const CellBoundary b = tile_boundary(s, t.tiles[i]);
    for (std::size_t q = 0; q < ports[i].east.size(); ++q)
      if (!consumed.count({i, q})) east_chars = std::max(east_chars, b.v[q].name.size());
  }
  const int label_size = spec.font_size - 2;
  auto gutter = [&](std::size_t chars) { return chars ? 0.6 * label_size * static_cast<double>(chars) + 6 : 0.0; };
  Painter p(spec, gutter(west_chars), gutter(east_chars));

  if (t.height > 0)
    for (std::int64_t x = 0; x <= t.width; ++x)
      p.line(p.X(x), p.Y(0), p.X(x), p.Y(t.height), spec.grid_stroke, 1, " stroke-dasharray=\"3,3\"");
  if (t.width > 0 || t.height > 0)
    for (std::int64_t x = 0; x <= t.width; ++x) p.text(p.X(x), spec.margin - 8, std::to_string(x), "middle", spec.font_size - 2);

  auto kind_of = [&](std::size_t i) -> std::optional<CellKind> {
    if (t.tiles[i].kind != TileKind::kCell) return std::nullopt;
    return s.find_cell(t.tiles[i].cell)->kind;
  };
  auto is_relane = [&](std::size_t i) { return t.tiles[i].kind == TileKind::kRelane; };

  // Zero-width tiles sharing a cut are spread around it in list order.
  std::vector<double> center(t.tiles.size());
  std::map<std::int64_t, std::vector<std::size_t>> on_cut;
  for (std::size_t i = 0; i < t.tiles.size(); ++i)
    if (t.tiles[i].zero_width() && !is_relane(i)) on_cut[t.tiles[i].rect.x0].push_back(i);
  for (const auto& [x, tiles] : on_cut)
    for (std::size_t k = 0; k < tiles.size(); ++k)
      center[tiles[k]] = p.X(static_cast<double>(x)) + (static_cast<double>(k) - (tiles.size() - 1) / 2.0) * kSpread;

  auto attach = [&](std::size_t i, bool west) {
    const Rect& r = t.tiles[i].rect;
    if (t.tiles[i].zero_width()) {
      const double half = kind_of(i) == CellKind::kBraid ? kBrace : 4;
      return west ? center[i] - half : center[i] + half;
    }
    const double in = kind_of(i) == CellKind::kGenerator ? kInset : 0;
    return west ? p.X(r.x0) + in : p.X(r.x1) - in;
  };
  auto west_y = [&](std::size_t i, std::size_t q) { return p.Y(mid(ports[i].west[q])); };
  auto east_y = [&](std::size_t i, std::size_t q) { return p.Y(mid(ports[i].east[q])); };

  // Start of the wire entering west port q of tile i, looking through relanes.
  auto source = [&](std::size_t i, std::size_t q) {
    PortLink l = links[i][q];
    double y = west_y(i, q);
    while (l.tile && is_relane(*l.tile)) {
      y = west_y(*l.tile, l.port);
      l = links[*l.tile][l.port];
    }
    return l.tile ? std::pair{attach(*l.tile, false), east_y(*l.tile, l.port)} : std::pair{p.X(0), y};
  };

  for (std::size_t i = 0; i < t.tiles.size(); ++i) {
    const CellBoundary b = tile_boundary(s, t.tiles[i]);
    for (std::size_t q = 0; q < links[i].size(); ++q) {
      if (!links[i][q].tile) p.text(p.X(0) - 4, west_y(i, q) + label_size / 3.0, b.u[q].name, "end", label_size);
      if (is_relane(i)) continue;
      const auto [x0, y0] = source(i, q);
      p.wire(x0, y0, attach(i, true), west_y(i, q));
    }
  }
  for (std::size_t i = 0; i < t.tiles.size(); ++i) {
    const CellBoundary b = tile_boundary(s, t.tiles[i]);
    for (std::size_t q = 0; q < ports[i].east.size(); ++q) {
      if (consumed.count({i, q})) continue;
      const double y = east_y(i, q);
      const auto [x0, y0] = is_relane(i) ? source(i, q) : std::pair{attach(i, false), y};
      p.wire(x0, y0, p.X(t.width), y);
      p.text(p.X(t.width) + 4, y + label_size / 3.0, b.v[q].name, "start", label_size);
    }
  }

  for (std::size_t i = 0; i < t.tiles.size(); ++i) {
    const Tile& tile = t.tiles[i];
    const Rect& r = tile.rect;
    const auto& pt = ports[i];
    switch (tile.kind) {
      case TileKind::kGap:
        break;
      case TileKind::kRelane:
        break;
      case TileKind::kNested:
        p.rect(p.X(r.x0), p.Y(r.y0), r.width() * spec.column_width, r.height() * spec.lane_height,
               " fill=\"none\" stroke=\"" + spec.box_stroke + "\" stroke-dasharray=\"5,3\"");
        p.text(p.X((r.x0 + r.x1) / 2.0), p.Y((r.y0 + r.y1) / 2.0) + spec.font_size / 3.0, tile.name, "middle",
               spec.font_size);
        break;
      case TileKind::kCell: {
        const CellGen* cell = s.find_cell(tile.cell);
        if (cell->kind == CellKind::kWait) {
          const double y = p.Y(mid(pt.west[0]));
          p.line(p.X(r.x0), y, p.X(r.x1), y, spec.wire_stroke, spec.wire_width);
          const double xc = p.X((r.x0 + r.x1) / 2.0);
          p.line(xc, y - 5, xc, y + 5, spec.wire_stroke, spec.wire_width);
        } else if (cell->kind == CellKind::kBraid) {
          const double x = center[i];
          p.line(x - kBrace, p.Y(mid(pt.west[0])), x + kBrace, p.Y(mid(pt.east[1])), spec.wire_stroke, spec.wire_width);
          p.line(x - kBrace, p.Y(mid(pt.west[1])), x + kBrace, p.Y(mid(pt.east[0])), spec.wire_stroke, spec.wire_width);
        } else {
          const double w = r.width() > 0 ? r.width() * spec.column_width - 2 * kInset : 8;
          const double x = r.width() > 0 ? p.X(r.x0) + kInset : center[i] - 4;
          p.rect(x, p.Y(r.y0) + kInset / 2, w, r.height() * spec.lane_height - kInset,
                 " rx=\"4\" fill=\"" + spec.box_fill + "\" stroke=\"" + spec.box_stroke + "\" stroke-width=\"1.2\"");
          p.text(p.X((r.x0 + r.x1) / 2.0), p.Y((r.y0 + r.y1) / 2.0) + spec.font_size / 3.0, tile.cell, "middle",
                 spec.font_size);
        }
        break;
      }
    }
  }
  return p.finish(static_cast<double>(t.width), static_cast<double>(t.height));
}

}  // namespace timecat
