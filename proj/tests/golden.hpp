#pragma once

// Golden artifacts: each case renders a string that must match the file of
// the same name under tests/golden byte for byte.

#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "timecat/commands.hpp"
#include "timecat/serialize.hpp"

namespace timecat::golden {

struct Case {
  std::string file;
  std::function<std::string()> produce;
};

inline std::string source(const std::string& rel) { return std::string(TIMECAT_SOURCE_DIR) + "/" + rel; }

inline std::string cli(const std::string& command, std::vector<std::string> args, bool json = true,
                       std::size_t samples = 200) {
  CommandOptions opts;
  opts.json = json;
  opts.samples = samples;
  if (!args.empty()) args[0] = source(args[0]);
  const CommandResult r = run_command(command, args, opts);
  return r.exit_code == 0 ? r.out : "exit " + std::to_string(r.exit_code) + "\n" + r.err;
}

inline std::vector<Case> cases() {
  const std::string m = "fixtures/mascarpone.tpg", e = "fixtures/example13.tpg";
  auto lib = [](const std::string& file, const std::function<Json(const TheoryFile&)>& f) {
    return [file, f] { return canonical(f(load_theory(source(file)))); };
  };
  return {
      {"mascarpone_main.svg", [=] { return cli("render", {m, "main"}, false); }},
      {"example13_pinwheel.svg", [=] { return cli("render", {e, "pinwheel"}, false); }},
      {"example13_staged.svg", [=] { return cli("render", {e, "staged"}, false); }},
      {"check_mascarpone.json", [=] { return cli("check", {m}); }},
      {"check_example13.json", [=] { return cli("check", {e}); }},
      {"time_main.json", [=] { return cli("time", {m, "main"}); }},
      {"equal_separate.json", [=] { return cli("equal", {m, "separate", "separate"}); }},
      {"sweep_pinwheel.json", [=] { return cli("sweep", {e, "pinwheel"}); }},
      {"guillotine_pinwheel.json", [=] { return cli("guillotine", {e, "pinwheel"}); }},
      {"schedule_pinwheel.json", [=] { return cli("schedule", {e, "pinwheel"}); }},
      {"schedule_staged.json", [=] { return cli("schedule", {e, "staged"}); }},
      {"schedule_main.json", [=] { return cli("schedule", {m, "main"}); }},
      {"laws_kitchen.json", [] { return cli("laws", {}, true, 20); }},
      {"schedule_main.txt", [=] { return cli("schedule", {m, "main"}, false); }},
      {"sweep_pinwheel.txt", [=] { return cli("sweep", {e, "pinwheel"}, false); }},
      {"error_unknown.txt", [=] { return cli("time", {m, "tiramisu"}, false); }},
      {"signature_mascarpone.json", lib(m, [](const TheoryFile& f) { return signature_json(draw(f.polygraph)); })},
      {"diagram_main.json", lib(m, [](const TheoryFile& f) { return diagram_json(f.find_diagram("main")->diagram); })},
      {"tiling_main.json",
       lib(m, [](const TheoryFile& f) {
         return tiling_json(draw(f.polygraph), to_pinwheel(f.find_diagram("main")->diagram));
       })},
      {"cell_main.json",
       lib(m, [](const TheoryFile& f) { return cell_json(compile(draw(f.polygraph), f.find_diagram("main")->diagram)); })},
      {"tiling_pinwheel.json",
       lib(e, [](const TheoryFile& f) { return tiling_json(draw(f.polygraph), f.find_tiling("pinwheel")->tiling()); })},
  };
}

inline std::string read(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string path(const Case& c) { return source("tests/golden/" + c.file); }

}  // namespace timecat::golden
