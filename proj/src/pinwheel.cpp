#include "timecat/pinwheel.hpp"

#include "timecat/error.hpp"

namespace timecat {

PinwheelCell PinwheelCell::make(CellBoundary boundary, SliceTerm body) {
  if (auto err = boundary.composability_error(); !err.empty())
    throw Error(ErrorCode::kBoundaryMismatch, "cell boundary " + boundary.str() + ": " + err);
  if (!(body.dom() == boundary.u + boundary.h) || !(body.cod() == boundary.k + boundary.v))
    throw Error(ErrorCode::kBoundaryMismatch, "body " + body.dom().str() + " => " + body.cod().str() +
                                                  " does not span boundary " + boundary.str());
  return PinwheelCell{std::move(boundary), std::move(body)};
}

bool cells_equal(const PinwheelCell& a, const PinwheelCell& b) {
  return a.boundary == b.boundary && terms_equal(a.body, b.body);
}

PinwheelCell cell_from_generator(const CellGen& cell) {
  return PinwheelCell::make(cell.boundary, single_slice_term(tilt_cell(cell)));
}

PinwheelCell cell_from_generator(const DoubleSignature& s, const std::string& name) {
  const CellGen* cell = s.find_cell(name);
  if (!cell) throw Error(ErrorCode::kUnknownName, "unknown generator " + name);
  return cell_from_generator(*cell);
}

PinwheelCell identity_cell_h(const Path& u) {
  return PinwheelCell::make({u, Path(u.target()), Path(u.source()), u}, identity_term(u));
}

PinwheelCell identity_cell_v(const Path& k) {
  return PinwheelCell::make({Path(k.source()), k, k, Path(k.target())}, identity_term(k));
}

PinwheelCell hcompose(const PinwheelCell& a, const PinwheelCell& b) {
  if (!(a.v() == b.u()))
    throw Error(ErrorCode::kBoundaryMismatch,
                "hcompose: right boundary " + a.v().str() + " differs from left boundary " + b.u().str());
  SliceTerm body = compose_terms(whisker(a.body, Path(a.u().source()), b.h()),
                                 whisker(b.body, a.k(), Path(b.h().target())));
  return PinwheelCell::make({a.u(), a.h() + b.h(), a.k() + b.k(), b.v()}, std::move(body));
}

PinwheelCell vcompose(const PinwheelCell& a, const PinwheelCell& d) {
  if (!(a.h() == d.k()))
    throw Error(ErrorCode::kBoundaryMismatch,
                "vcompose: bottom boundary " + a.h().str() + " differs from top boundary " + d.k().str());
  SliceTerm body = compose_terms(whisker(d.body, a.u(), Path(d.v().target())),
                                 whisker(a.body, Path(a.u().source()), d.v()));
  return PinwheelCell::make({a.u() + d.u(), d.h(), a.k(), a.v() + d.v()}, std::move(body));
}

Grade duration(const PinwheelCell& c) {
  if (c.h().size() != c.k().size())
    throw Error(ErrorCode::kSkewCell, "skew cell: bottom has length " + std::to_string(c.h().size()) +
                                          ", top has length " + std::to_string(c.k().size()));
  return Grade(static_cast<std::uint64_t>(c.h().size()));
}

bool is_pinwheel_cell(const DoubleSignature& s, const CellBoundary& boundary, const SliceTerm& body) {
  if (!boundary.composability_error().empty()) return false;
  if (!(body.dom() == boundary.u + boundary.h) || !(body.cod() == boundary.k + boundary.v)) return false;
  for (const auto& slice : body.slices()) {
    const CellGen* cell = s.find_cell(slice.gen.name);
    if (!cell || !(tilt_cell(*cell) == slice.gen)) return false;
  }
  return true;
}

std::map<std::string, PinwheelCell> pinwheel_unit(const DoubleSignature& s) {
  std::map<std::string, PinwheelCell> out;
  for (const auto& [name, cell] : s.cells()) out.emplace(name, cell_from_generator(cell));
  return out;
}

PinwheelCell flatten(const DoubleSignature& s, const PinwheelCell& c,
                     const std::map<std::string, PinwheelCell>& substitution) {
  std::vector<Slice> slices;
  for (const auto& slice : c.body.slices()) {
    auto it = substitution.find(slice.gen.name);
    if (it == substitution.end())
      throw Error(ErrorCode::kMissingAssignment, "substitution has no image for " + slice.gen.name);
    const PinwheelCell& img = it->second;
    if (!(img.u() + img.h() == slice.gen.dom) || !(img.k() + img.v() == slice.gen.cod))
      throw Error(ErrorCode::kBoundaryMismatch, "image of " + slice.gen.name + " has boundary " +
                                                    img.boundary.str() + ", expected " + slice.gen.dom.str() +
                                                    " => " + slice.gen.cod.str());
    if (!is_pinwheel_cell(s, img.boundary, img.body))
      throw Error(ErrorCode::kBoundaryMismatch, "image of " + slice.gen.name + " is not a cell over the signature");
    const SliceTerm placed = whisker(img.body, slice.left, slice.right);
    slices.insert(slices.end(), placed.slices().begin(), placed.slices().end());
  }
  return PinwheelCell::make(c.boundary, SliceTerm(c.body.dom(), c.body.cod(), std::move(slices)));
}

}  // namespace timecat
