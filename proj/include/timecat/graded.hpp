#pragma once

// Graded diagrams: expressions of the free max-plus graded symmetric strict
// monoidal category over a timed polygraph, and their compilation to
// pinwheel tilings. Regrading compiles to wait insertion.

#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "timecat/duoid.hpp"
#include "timecat/error.hpp"
#include "timecat/pinwheel.hpp"
#include "timecat/rewrite.hpp"
#include "timecat/signature.hpp"
#include "timecat/tiling.hpp"

namespace timecat {

using Objects = std::vector<std::string>;

struct Typing {
  Objects dom;
  Objects cod;
  Grade grade;
  bool operator==(const Typing&) const = default;
};

/// Immutable expression tree. Constructors never throw; typing is computed
/// on construction and ill-typed diagrams remember the first error.
class Diagram {
 public:
  enum class Kind { kGen, kId, kSym, kUnitI, kSeq, kPar, kRegrade };

  static Diagram gen(const Generator& g);
  static Diagram id(Objects objects);
  static Diagram sym(const std::string& x, const std::string& y);
  /// The special identity i_I on the monoidal unit, graded ⊥.
  static Diagram unit_i();
  static Diagram seq(const Diagram& a, const Diagram& b);
  static Diagram par(const Diagram& a, const Diagram& b);
  static Diagram regrade(const Diagram& d, Grade target);
  /// Unit wait on one object: the identity regraded to 1.
  static Diagram wait(const std::string& x);

  Kind kind() const;
  const Generator& generator() const;  // kGen
  const Objects& objects() const;      // kId, kSym
  const Diagram& left() const;         // kSeq, kPar; the regraded diagram for kRegrade
  const Diagram& right() const;        // kSeq, kPar
  const Grade& target() const;         // kRegrade

  bool well_typed() const;
  /// Throws the stored error when ill-typed.
  const Typing& typing() const;
  const Objects& dom() const { return typing().dom; }
  const Objects& cod() const { return typing().cod; }
  const Grade& grade() const { return typing().grade; }

  /// Expression in the theory-file syntax.
  std::string str() const;

  bool operator==(const Diagram& o) const;

 private:
  struct Node;
  explicit Diagram(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Throws Error(kBoundaryMismatch) or Error(kInvalidRegrade).
Typing typecheck(const Diagram& d);

/// Geometric layout: one tile per generator, braids at zero-width cuts,
/// shorter parallel branches and regrades padded with unit waits.
Tiling to_pinwheel(const Diagram& d);
/// assemble_tiling(s, to_pinwheel(d)).
PinwheelCell compile(const DoubleSignature& s, const Diagram& d);
/// The same cell built with hcompose/vcompose instead of geometry.
PinwheelCell compile_compositional(const DoubleSignature& s, const Diagram& d);

/// Same grade and equal bodies after quotient rewrites. Throws
/// Error(kBoundaryMismatch) if the boundaries differ.
bool eq_semantic(const DoubleSignature& s, const Diagram& a, const Diagram& b, const RuleSet& rules = default_rules());

/// Axiom (9), oriented either way. Par(Seq(f,h), Seq(g,k)) becomes
/// Seq(Par(f,g), Par(h,k)); Seq(Par(f,g), Par(h,k)) becomes the regraded
/// Par of Seqs. Throws Error(kShapeMismatch) for other shapes.
Diagram weak_interchange(const Diagram& d);

/// Random well-typed diagram with the given domain; depth bounds nesting.
struct DiagramSampler {
  const TimedPolygraph& polygraph;
  std::uint64_t max_extra_grade = 2;

  Diagram from(const Objects& dom, int depth, std::mt19937_64& rng) const;
  Objects random_objects(std::size_t max_len, std::mt19937_64& rng) const;
};

struct AxiomResult {
  std::string axiom;
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::optional<std::string> first_failure;
};

/// Builds both sides of each graded axiom on random diagrams and compares
/// them with eq_semantic.
std::vector<AxiomResult> axioms_check(const TimedPolygraph& p, std::size_t samples, std::uint64_t seed);

}  // namespace timecat
