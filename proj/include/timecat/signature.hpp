#pragma once

// Timed polygraphs (objects plus duration-annotated generators), double
// signatures, their morphisms, and `draw`, which turns a polygraph into a
// single-object double signature with generator, wait and braiding cells.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "timecat/duoid.hpp"
#include "timecat/path.hpp"

namespace timecat {

struct Generator {
  std::string name;
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;
  Grade time;

  bool operator==(const Generator&) const = default;
};

struct TimedPolygraph {
  std::vector<std::string> objects;
  std::vector<Generator> generators;

  const Generator* find(const std::string& name) const;
  bool has_object(const std::string& name) const;
};

/// Empty iff every generator names declared objects and all names are unique.
std::vector<std::string> validate_polygraph(const TimedPolygraph& p);

/// Boundary of a double cell: u left (top to bottom), h bottom, k top,
/// v right (top to bottom). Corners: u: X->Y, h: Y->W, k: X->Z, v: Z->W.
struct CellBoundary {
  Path u, h, k, v;

  bool operator==(const CellBoundary&) const = default;
  auto operator<=>(const CellBoundary&) const = default;

  /// Empty string when composable, otherwise a description of the problem.
  std::string composability_error() const;
  std::string str() const;
};

enum class CellKind { kGenerator, kWait, kBraid };

struct CellGen {
  std::string name;
  CellBoundary boundary;
  CellKind kind = CellKind::kGenerator;

  bool operator==(const CellGen&) const = default;
};

struct EdgeDecl {
  std::string src;
  std::string tgt;
  bool operator==(const EdgeDecl&) const = default;
};

class DoubleSignature {
 public:
  std::set<std::string> objects;
  std::map<std::string, EdgeDecl> h_edges;
  std::map<std::string, EdgeDecl> v_edges;

  /// Adds a cell after checking names, edges and composability.
  void add_cell(CellGen cell);
  const CellGen* find_cell(const std::string& name) const;
  const std::map<std::string, CellGen>& cells() const { return cells_; }

  /// Every cell boundary uses declared edges with matching endpoints.
  std::vector<std::string> validate() const;

  bool operator==(const DoubleSignature&) const = default;

 private:
  std::map<std::string, CellGen> cells_;
};

// Names draw() gives the structural cells. The brackets keep them disjoint
// from user identifiers.
std::string wait_cell_name(const std::string& object);
std::string braid_cell_name(const std::string& a, const std::string& b);
inline const char* kTimeEdge = "1";

DoubleSignature draw(const TimedPolygraph& p);

struct SignatureMorphism {
  std::map<std::string, std::string> objects;
  std::map<std::string, std::string> h_edges;
  std::map<std::string, std::string> v_edges;
  /// Image cell, including the boundary it claims in the target.
  std::map<std::string, CellGen> cells;

  static SignatureMorphism identity(const DoubleSignature& s);
};

/// Image path under the edge maps (α* on paths).
Path map_path(const SignatureMorphism& m, const Path& p);

/// Image signature of `s` under `m`. Throws Error(kBoundaryMismatch) naming
/// the offending cell when an image cell's boundary is not α* of the source
/// boundary, and Error(kUnknownName) when a map is not total.
DoubleSignature apply_signature_morphism(const SignatureMorphism& m, const DoubleSignature& s);

struct PolygraphMorphism {
  std::map<std::string, std::string> objects;
  std::map<std::string, Generator> generators;

  static PolygraphMorphism identity(const TimedPolygraph& p);
};

/// Image polygraph. Rejects generator images that change time or whose
/// inputs/outputs are not the object-wise images.
TimedPolygraph apply_polygraph_morphism(const PolygraphMorphism& m, const TimedPolygraph& p);

/// draw on morphisms: the induced double signature morphism.
SignatureMorphism draw_morphism(const PolygraphMorphism& m, const TimedPolygraph& p);

}  // namespace timecat
