#pragma once

#include <compare>
#include <string>
#include <vector>

namespace timecat {

/// Which edge set of a double signature a 1-cell comes from. After tilting,
/// both kinds live side by side as 1-cells of the same 2-graph.
enum class EdgeKind { kVertical, kHorizontal };

/// A 1-cell with its endpoints.
struct Wire {
  EdgeKind kind = EdgeKind::kVertical;
  std::string name;
  std::string src;
  std::string tgt;

  auto operator<=>(const Wire&) const = default;
  bool operator==(const Wire&) const = default;
};

/// A composable path of 1-cells. The empty path at an object is a value of
/// its own (`at` records the object), so boundaries like "0; 0" are typed.
class Path {
 public:
  Path() = default;
  explicit Path(std::string at) : at_(std::move(at)) {}
  /// Throws Error(kBoundaryMismatch) if consecutive wires do not chain.
  Path(std::string at, std::vector<Wire> wires);

  static Path of(std::vector<Wire> wires);  // wires must be non-empty

  const std::string& source() const { return at_; }
  const std::string& target() const { return wires_.empty() ? at_ : wires_.back().tgt; }
  const std::vector<Wire>& wires() const { return wires_; }
  std::size_t size() const { return wires_.size(); }
  bool empty() const { return wires_.empty(); }
  const Wire& operator[](std::size_t i) const { return wires_[i]; }

  bool all_of_kind(EdgeKind kind) const;

  /// Sub-path [begin, begin + len).
  Path slice(std::size_t begin, std::size_t len) const;

  /// Concatenation; throws Error(kBoundaryMismatch) on endpoint mismatch.
  Path operator+(const Path& other) const;

  std::string str() const;

  bool operator==(const Path&) const = default;
  auto operator<=>(const Path&) const = default;

 private:
  std::string at_;
  std::vector<Wire> wires_;
};

Wire vwire(const std::string& name, const std::string& src = "*", const std::string& tgt = "*");
Wire hwire(const std::string& name, const std::string& src = "*", const std::string& tgt = "*");

/// Path of vertical wires on the single object "*", one per object name.
Path vpath(const std::vector<std::string>& names);
/// `n` copies of the horizontal unit-time edge "1" on "*".
Path time_path(std::size_t n);

}  // namespace timecat
