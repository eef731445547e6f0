#pragma once

// Cells of the pinwheel double category over a double signature: a double
// cell boundary (u; h; k; v) together with a slice term u·h => k·v over the
// tilted 2-graph. Horizontal and vertical composition whisker and stack the
// bodies; `flatten` is the multiplication of the pinwheel monad.

#include <map>
#include <string>

#include "timecat/duoid.hpp"
#include "timecat/signature.hpp"
#include "timecat/tilted.hpp"

namespace timecat {

struct PinwheelCell {
  CellBoundary boundary;
  SliceTerm body;

  const Path& u() const { return boundary.u; }
  const Path& h() const { return boundary.h; }
  const Path& k() const { return boundary.k; }
  const Path& v() const { return boundary.v; }

  /// Throws Error(kBoundaryMismatch) unless dom(body) = u·h and cod(body) = k·v.
  static PinwheelCell make(CellBoundary boundary, SliceTerm body);

  bool operator==(const PinwheelCell&) const = default;
};

/// Cells equal up to interchange of their bodies.
bool cells_equal(const PinwheelCell& a, const PinwheelCell& b);

PinwheelCell cell_from_generator(const DoubleSignature& s, const std::string& name);
PinwheelCell cell_from_generator(const CellGen& cell);

/// (u; ε; ε; u): unit for hcompose.
PinwheelCell identity_cell_h(const Path& u);
/// (ε; k; k; ε): unit for vcompose.
PinwheelCell identity_cell_v(const Path& k);

/// a beside b (a on the left); requires a.v = b.u.
PinwheelCell hcompose(const PinwheelCell& a, const PinwheelCell& b);
/// a above d; requires a.h = d.k.
PinwheelCell vcompose(const PinwheelCell& a, const PinwheelCell& d);

/// Length of the (equal) top and bottom boundaries. Throws Error(kSkewCell).
Grade duration(const PinwheelCell& c);

/// Is `body` a cell of pinwheel(s) at `boundary`? Every slice must use a cell
/// of `s` with its tilted boundary, and the body must span u·h => k·v.
bool is_pinwheel_cell(const DoubleSignature& s, const CellBoundary& boundary, const SliceTerm& body);

/// Unit of the pinwheel monad: every cell of `s` as a one-slice cell.
std::map<std::string, PinwheelCell> pinwheel_unit(const DoubleSignature& s);

/// Monad multiplication. `c` is a cell whose body's generators are named
/// cells of forget(pinwheel(s)); each is replaced by the whiskered body of
/// its image. Images must be well-typed over tilt(s) at the generator's
/// boundary; generators with no entry are an error.
PinwheelCell flatten(const DoubleSignature& s, const PinwheelCell& c,
                     const std::map<std::string, PinwheelCell>& substitution);

}  // namespace timecat
