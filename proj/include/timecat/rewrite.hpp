#pragma once

// Oriented rewrites on pinwheel cell bodies. The default rules are the
// symmetric-monoidal equations plus wait sliding: braid involution, braid
// naturality, Yang-Baxter, and waits moving past the cell they feed. They
// are a reconstruction, not a transcription of a published equation set.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "timecat/pinwheel.hpp"

namespace timecat {

/// Compared lexicographically, component by component. Components that
/// encode multisets are stored sorted in descending order, which makes the
/// lexicographic order coincide with the multiset order.
using Measure = std::vector<std::vector<std::int64_t>>;

struct RewriteRule {
  std::string name;
  /// Every term obtained by one application of the rule, in a fixed order.
  std::function<std::vector<SliceTerm>(const DoubleSignature&, const SliceTerm&)> candidates;
  /// Must strictly decrease on every step the engine takes with this rule.
  std::function<Measure(const DoubleSignature&, const SliceTerm&)> measure;
};

class RuleSet {
 public:
  /// Throws Error(kRuleRejected) for rules without a measure or candidates,
  /// Error(kDuplicateName) for a name already present.
  void add(RewriteRule rule);
  /// Throws Error(kUnknownName).
  void remove(const std::string& name);

  const std::vector<RewriteRule>& rules() const { return rules_; }
  std::vector<std::string> names() const;

 private:
  std::vector<RewriteRule> rules_;
};

/// [generators upstream of each braid], [non-waits downstream of each wait],
/// [slice count], [sum of braid offsets in normal form].
Measure quotient_measure(const DoubleSignature& s, const SliceTerm& t);

inline constexpr const char* kBraidInvolution = "braid-involution";
inline constexpr const char* kBraidNaturality = "braid-naturality";
inline constexpr const char* kYangBaxter = "yang-baxter";
inline constexpr const char* kWaitSlide = "wait-slide";

RewriteRule braid_involution_rule();
RewriteRule braid_naturality_rule();
RewriteRule yang_baxter_rule();
RewriteRule wait_slide_rule();
RuleSet default_rules();

/// Applies rules until none fires, then normalizes. A step is taken only if
/// it strictly decreases its rule's measure and does not increase any other
/// rule's measure, so every rule set terminates.
PinwheelCell apply_quotient_rewrites(const DoubleSignature& s, const PinwheelCell& c, const RuleSet& rules,
                                     std::vector<std::string>* trace = nullptr);

/// Cells equal after rewriting both with `rules`.
bool cells_equivalent(const DoubleSignature& s, const PinwheelCell& a, const PinwheelCell& b, const RuleSet& rules);

}  // namespace timecat
