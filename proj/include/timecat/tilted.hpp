#pragma once

// 2-graphs, the tilt of a double signature, and the free 2-category over a
// 2-graph realized as slice terms: sequences of single-generator layers, each
// whiskered by identity paths. Interchange is the only relation between
// slice terms; `normalize` decides it with a left-greedy normal form.

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "timecat/error.hpp"
#include "timecat/path.hpp"
#include "timecat/signature.hpp"

namespace timecat {

/// A 2-cell generator: name plus parallel domain/codomain paths.
struct TwoCell {
  std::string name;
  Path dom;
  Path cod;

  bool operator==(const TwoCell&) const = default;
  auto operator<=>(const TwoCell&) const = default;
};

struct TwoGraph {
  std::set<std::string> objects;
  std::set<Wire> edges;
  std::map<std::string, TwoCell> two_cells;

  const TwoCell* find(const std::string& name) const;
  /// Each 2-cell has parallel boundary paths made of declared edges.
  std::vector<std::string> validate() const;
};

/// The 2-cell a double cell tilts to: u·h => k·v.
TwoCell tilt_cell(const CellGen& cell);
TwoGraph tilt(const DoubleSignature& s);

/// One layer: id_left * gen * id_right.
struct Slice {
  Path left;
  TwoCell gen;
  Path right;

  Path input() const { return left + gen.dom + right; }
  Path output() const { return left + gen.cod + right; }
  std::size_t offset() const { return left.size(); }

  bool operator==(const Slice&) const = default;
  auto operator<=>(const Slice&) const = default;
};

class SliceTerm {
 public:
  SliceTerm() = default;
  /// Checks layer chaining; throws Error(kBoundaryMismatch) otherwise.
  SliceTerm(Path dom, Path cod, std::vector<Slice> slices);

  const Path& dom() const { return dom_; }
  const Path& cod() const { return cod_; }
  const std::vector<Slice>& slices() const { return slices_; }
  std::size_t size() const { return slices_.size(); }

  /// Generator names in slice order.
  std::vector<std::string> generator_names() const;

  bool operator==(const SliceTerm&) const = default;

 private:
  Path dom_;
  Path cod_;
  std::vector<Slice> slices_;
};

/// Builds a term from a frontier and (generator, offset) layers, deriving
/// the whiskers. Throws if a generator does not match the frontier.
SliceTerm build_term(const Path& dom, const std::vector<std::pair<TwoCell, std::size_t>>& layers);

SliceTerm identity_term(const Path& p);
SliceTerm single_slice_term(const TwoCell& gen);
SliceTerm compose_terms(const SliceTerm& t1, const SliceTerm& t2);
SliceTerm whisker(const SliceTerm& t, const Path& left, const Path& right);

/// Moves slice `from` to index `to` through interchanges with the slices in
/// between. Returns nullopt when some pair in the way is not independent.
std::optional<SliceTerm> move_slice(const SliceTerm& t, std::size_t from, std::size_t to);

/// Left-greedy normal form, idempotent. Canonical for terms whose slices all have
/// non-empty domain and codomain; deterministic otherwise.
SliceTerm normalize(const SliceTerm& t);
/// Equality modulo interchange. Terms with empty-sided slices are compared
/// by exhaustive search of the interchange class when normal forms differ.
bool terms_equal(const SliceTerm& t1, const SliceTerm& t2);

/// Wire-occurrence bookkeeping: which slice produced each wire a slice
/// consumes. Producer -1 means the term's domain.
struct Dataflow {
  struct Port {
    int producer;             // slice index or -1
    std::size_t producer_pos; // index in the producer's cod (or in dom)
  };
  std::vector<std::vector<Port>> inputs;  // per slice, per wire of gen.dom
  /// consumers[i][j]: slice consuming output j of slice i, -1 for the codomain.
  std::vector<std::vector<int>> consumers;
};
Dataflow dataflow(const SliceTerm& t);

/// Callbacks for folding a slice term into another 2-category.
template <class V>
struct Interpretation {
  std::function<V(const Path&)> identity;
  std::function<V(const V&, const V&)> compose;
  std::function<V(const V&, const Path&, const Path&)> whisker;
};

/// Folds `t` as compose(... compose(identity(dom), whisker(g1)) ..., whisker(gn)).
/// Throws Error(kMissingAssignment) for generators absent from `assignment`.
template <class V>
V interpret(const SliceTerm& t, const std::map<std::string, V>& assignment, const Interpretation<V>& ops) {
  V acc = ops.identity(t.dom());
  for (const auto& s : t.slices()) {
    auto it = assignment.find(s.gen.name);
    if (it == assignment.end())
      throw Error(ErrorCode::kMissingAssignment, "no value assigned to generator " + s.gen.name);
    acc = ops.compose(acc, ops.whisker(it->second, s.left, s.right));
  }
  return acc;
}

}  // namespace timecat
