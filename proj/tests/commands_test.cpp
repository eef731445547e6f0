#include "timecat/commands.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>

#include "golden.hpp"
#include "timecat/dag.hpp"
#include "timecat/serialize.hpp"

namespace timecat {
namespace {

const std::string kMascarpone = golden::source("fixtures/mascarpone.tpg");
const std::string kExample13 = golden::source("fixtures/example13.tpg");

CommandResult run(const std::string& command, const std::vector<std::string>& args, bool json = false) {
  CommandOptions opts;
  opts.json = json;
  return run_command(command, args, opts);
}

TEST(Commands, PinwheelSchedule) {
  const TheoryFile f = load_theory(kExample13);
  const ScheduleReport r = cmd_schedule(f, "pinwheel");
  EXPECT_EQ(r.grade, Grade(4));
  EXPECT_EQ(r.makespan, Grade(3));
  std::map<std::string, Grade> starts;
  for (std::size_t i = 0; i < r.dag.nodes.size(); ++i) starts[r.dag.nodes[i].name] = r.starts[i];
  const std::map<std::string, Grade> expected = {{"f", 0}, {"g", 0}, {"a", 1}, {"h", 1}, {"k", 2}};
  EXPECT_EQ(starts, expected);
  EXPECT_FALSE(cmd_guillotine(f, "pinwheel"));

  const ScheduleReport staged = cmd_schedule(f, "staged");
  EXPECT_EQ(staged.grade, Grade(4));
  EXPECT_EQ(staged.makespan, Grade(3));
}

TEST(Commands, PinwheelScheduleText) {
  const CommandResult r = run("schedule", {kExample13, "pinwheel"});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out.rfind("grade 4\nmakespan 3\n", 0), 0u) << r.out;
}

TEST(Commands, MascarponeTimeAgreesWithLayout) {
  const TheoryFile f = load_theory(kMascarpone);
  const DoubleSignature s = draw(f.polygraph);
  for (const auto& d : f.diagrams) {
    const Grade g = cmd_time(f, d.name);
    EXPECT_EQ(g, duration(compile(s, d.diagram))) << d.name;
    EXPECT_LE(makespan(to_dag(d.diagram)), g) << d.name;
  }
  EXPECT_EQ(cmd_time(f, "main"), Grade(9));
  EXPECT_EQ(cmd_schedule(f, "main").makespan, Grade(8));
}

TEST(Commands, EqualAgreesWithSemanticEquality) {
  const TheoryFile f = load_theory(kMascarpone);
  const DoubleSignature s = draw(f.polygraph);
  for (const auto& a : f.diagrams)
    for (const auto& b : f.diagrams) {
      if (a.diagram.dom() != b.diagram.dom() || a.diagram.cod() != b.diagram.cod()) continue;
      EXPECT_EQ(cmd_equal(f, a.name, b.name), eq_semantic(s, a.diagram, b.diagram));
    }
}

TEST(Commands, ExitCodes) {
  EXPECT_EQ(run("check", {kMascarpone}).exit_code, 0);
  EXPECT_EQ(run("bake", {kMascarpone}).exit_code, 2);
  EXPECT_EQ(run("time", {kMascarpone}).exit_code, 2);
  EXPECT_EQ(run("time", {"/nonexistent.tpg", "main"}).exit_code, 2);

  const CommandResult unknown = run("time", {kMascarpone, "tiramisu"});
  EXPECT_EQ(unknown.exit_code, 1);
  EXPECT_EQ(unknown.err.rfind("error[unknown-name]", 0), 0u) << unknown.err;

  const CommandResult mismatch = run("equal", {kMascarpone, "main", "separate"});
  EXPECT_EQ(mismatch.exit_code, 1);
  EXPECT_NE(mismatch.err.find("boundary"), std::string::npos) << mismatch.err;

  EXPECT_EQ(run("sweep", {kMascarpone, "main"}).exit_code, 1);
}

TEST(Commands, SyntaxErrorsCarryLocations) {
  const std::string path = ::testing::TempDir() + "broken.tpg";
  std::ofstream(path) << "obj X\ngen f : X ->\n";
  const CommandResult r = run("check", {path});
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_NE(r.err.find("error[syntax]: line 2, column"), std::string::npos) << r.err;
}

TEST(Commands, JsonIsCanonical) {
  for (const auto& [cmd, args] : std::vector<std::pair<std::string, std::vector<std::string>>>{
           {"check", {kExample13}},
           {"schedule", {kExample13, "pinwheel"}},
           {"sweep", {kExample13, "pinwheel"}},
           {"equal", {kExample13, "staged", "staged"}}}) {
    const CommandResult r = run(cmd, args, true);
    ASSERT_EQ(r.exit_code, 0) << r.err;
    EXPECT_EQ(canonical(Json::parse(r.out)), r.out) << cmd;
  }
  const Json j = Json::parse(run("schedule", {kExample13, "pinwheel"}, true).out);
  EXPECT_EQ(j["grade"], 4);
  EXPECT_EQ(j["makespan"], 3);
}

TEST(Commands, LawsPassOnKitchen) {
  CommandOptions opts;
  opts.samples = 30;
  const CommandResult r = run_command("laws", {}, opts);
  EXPECT_EQ(r.exit_code, 0) << r.out;
  EXPECT_NE(r.out.find("duoid max-plus: ok"), std::string::npos);
  opts.seed = 99;
  EXPECT_EQ(run_command("laws", {}, opts).out, run_command("laws", {}, opts).out);
}

TEST(Commands, RenderWritesFile) {
  CommandOptions opts;
  opts.out = ::testing::TempDir() + "pinwheel.svg";
  const CommandResult r = run_command("render", {kExample13, "pinwheel"}, opts);
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(golden::read(*opts.out), run("render", {kExample13, "pinwheel"}).out);
}

TEST(Golden, ArtifactsMatch) {
  const bool update = std::getenv("TIMECAT_UPDATE_GOLDEN") != nullptr;
  for (const auto& c : golden::cases()) {
    const std::string got = c.produce();
    EXPECT_EQ(got, c.produce()) << c.file << " is not deterministic";
    if (update) {
      std::ofstream(golden::path(c), std::ios::binary) << got;
      continue;
    }
    EXPECT_EQ(got, golden::read(golden::path(c))) << c.file;
  }
}

}  // namespace
}  // namespace timecat
