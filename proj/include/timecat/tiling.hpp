#pragma once

// Geometric tilings of a rectangle by cells: columns are time units, rows are
// layout lanes (y grows downwards). Vertical tile sides carry object wires at
// port intervals; every column of a horizontal side carries the time edge.
// Zero-width tiles (braids, relanes, zero-duration generators) sit on
// vertical lines and are ordered by their position in the tile list.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "timecat/pinwheel.hpp"
#include "timecat/signature.hpp"

namespace timecat {

/// Exact rational for port endpoints (even splits of tile sides).
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d = 1);  // NOLINT(google-explicit-constructor)

  auto operator<=>(const Rational& o) const { return num * o.den <=> o.num * den; }
  bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const;
};

struct Interval {
  Rational lo, hi;
  bool operator==(const Interval&) const = default;
  auto operator<=>(const Interval&) const = default;
};

struct Rect {
  std::int64_t x0 = 0, x1 = 0, y0 = 0, y1 = 0;
  std::int64_t width() const { return x1 - x0; }
  std::int64_t height() const { return y1 - y0; }
  bool operator==(const Rect&) const = default;
};

enum class TileKind {
  kCell,    // a cell of the signature: generator, wait or braid
  kGap,     // identity on time edges only: (ε; 1^w; 1^w; ε)
  kRelane,  // zero-width identity on wires that changes their lanes
  kNested,  // an arbitrary pinwheel cell
};

struct Tile {
  std::string name;
  TileKind kind = TileKind::kCell;
  std::string cell;                     // kCell
  std::optional<PinwheelCell> nested;   // kNested
  Path passthrough;                     // kRelane
  Rect rect;
  // Explicit port intervals; when absent they are derived from neighbours.
  std::optional<std::vector<Interval>> west_ports;
  std::optional<std::vector<Interval>> east_ports;

  bool zero_width() const { return rect.x0 == rect.x1; }
};

struct Tiling {
  std::int64_t width = 0;
  std::int64_t height = 0;
  std::vector<Tile> tiles;
};

Tile make_cell_tile(std::string name, std::string cell, Rect rect);
/// Zero-width braid of (a, b) on vertical line `col`, rows [lane, lane + 2].
Tile make_braid_tile(std::int64_t col, std::int64_t lane, const std::string& a, const std::string& b);

/// Boundary of a tile as a double cell over `s`.
CellBoundary tile_boundary(const DoubleSignature& s, const Tile& t);

/// Port intervals actually used for each side (explicit or derived).
struct ResolvedPorts {
  std::vector<Interval> west, east;
};
std::vector<ResolvedPorts> resolve_ports(const DoubleSignature& s, const Tiling& t);

/// Throws Error(kOverlapOrGap) when area tiles do not partition the box or a
/// tile is malformed, Error(kUnknownName) for unknown cells, Error(kSkewCell)
/// when a tile's width differs from its cell's duration.
void validate_tiling(const DoubleSignature& s, const Tiling& t);

struct SweepResult {
  PinwheelCell cell;
  std::vector<std::string> order;  // tile names in emission order
};

/// Frontier sweep from u·h towards k·v. Each step emits the ready tile whose
/// west+south sequence starts leftmost in the frontier. Throws
/// Error(kNonSweepable) when no tile is ready.
SweepResult sweep_tiling(const DoubleSignature& s, const Tiling& t);
PinwheelCell assemble_tiling(const DoubleSignature& s, const Tiling& t);

/// Producer of a tile's west port: an east port of another tile, or the
/// left boundary when `tile` is empty.
struct PortLink {
  std::optional<std::size_t> tile;
  std::size_t port = 0;
};
/// For each tile, the producer of each of its west ports.
std::vector<std::vector<PortLink>> wire_links(const DoubleSignature& s, const Tiling& t);

/// Guillotine property: a single tile, or a full-height/full-width cut whose
/// two sides are again binary-composable.
bool is_binary_composable(const DoubleSignature& s, const Tiling& t);

}  // namespace timecat
