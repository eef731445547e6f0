#pragma once

// Command implementations behind the timecat executable. Each cmd_* works on
// a parsed theory; run_command adds file loading, formatting and exit codes
// (0 success, 1 domain error or failed check, 2 usage error).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "timecat/dag.hpp"
#include "timecat/duoid.hpp"
#include "timecat/graded.hpp"
#include "timecat/render.hpp"
#include "timecat/theory.hpp"

namespace timecat {

/// The crema di mascarpone theory used when `laws` gets no file.
const char* kitchen_theory();

Grade cmd_time(const TheoryFile& f, const std::string& name);
bool cmd_equal(const TheoryFile& f, const std::string& a, const std::string& b);
std::string cmd_render(const TheoryFile& f, const std::string& name, const RenderSpec& spec = {});
SweepResult cmd_sweep(const TheoryFile& f, const std::string& tiling);
bool cmd_guillotine(const TheoryFile& f, const std::string& tiling);

struct ScheduleReport {
  Grade grade;     // diagram grade, or tiling width
  Grade makespan;  // longest dependency path
  DepDAG dag;
  std::vector<Grade> starts;
};
ScheduleReport cmd_schedule(const TheoryFile& f, const std::string& name);

struct LawsReport {
  LawReport<Grade> duoid;
  std::vector<AxiomResult> axioms;
  bool ok() const;
};
LawsReport cmd_laws(const TimedPolygraph& p, std::size_t samples, std::uint64_t seed);

struct CommandOptions {
  bool json = false;
  std::size_t samples = 200;
  std::uint64_t seed = 1;
  std::optional<std::string> out;
  RenderSpec render;
};

struct CommandResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

CommandResult run_command(const std::string& command, const std::vector<std::string>& args, const CommandOptions& opts);

}  // namespace timecat
