#pragma once

// Dependency DAGs of generator occurrences. An edge means an output wire of
// one occurrence feeds an input of another; waits and braids carry wires
// through without becoming nodes. Used as the makespan oracle.

#include <string>
#include <utility>
#include <vector>

#include "timecat/duoid.hpp"
#include "timecat/graded.hpp"
#include "timecat/tiling.hpp"

namespace timecat {

struct DepNode {
  std::string name;       // unique occurrence name
  std::string generator;  // cell or generator it instantiates
  Grade duration;
};

struct DepDAG {
  std::vector<DepNode> nodes;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // sorted, unique

  std::size_t index(const std::string& name) const;  // throws Error(kUnknownName)
};

/// Occurrence names match the tile names to_pinwheel gives generators.
DepDAG to_dag(const Diagram& d);
DepDAG to_dag(const DoubleSignature& s, const Tiling& t);

/// Longest weighted path by topological dynamic programming.
Grade makespan_dp(const DepDAG& g);
/// Longest weighted path by enumerating every maximal path.
Grade makespan_paths(const DepDAG& g);
/// Both of the above; throws Error(kCycle) on a cycle and std::logic_error
/// if they disagree.
Grade makespan(const DepDAG& g);

/// As-soon-as-possible start times, one per node.
std::vector<Grade> asap_starts(const DepDAG& g);

std::string to_dot(const DepDAG& g);

}  // namespace timecat
