#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "timecat/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"timecat: timed process theories, pinwheel tilings and schedules"};
  std::string command;
  std::vector<std::string> args;
  timecat::CommandOptions opts;
  std::string out;

  app.add_option("command", command, "check | time | equal | render | sweep | guillotine | schedule | laws")->required();
  app.add_option("args", args, "FILE and NAMEs, as the command requires");
  app.add_option("--out", out, "write output to PATH (render)");
  app.add_option("--samples", opts.samples, "random samples per axiom (laws)")->capture_default_str();
  app.add_option("--seed", opts.seed, "random seed (laws)")->envname("TIMECAT_SEED")->capture_default_str();
  app.add_flag("--json", opts.json, "canonical JSON output");
  app.add_option("--column-width", opts.render.column_width, "pixels per time unit (render)")->capture_default_str();
  app.add_option("--lane-height", opts.render.lane_height, "pixels per lane (render)")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  if (!out.empty()) opts.out = out;

  const timecat::CommandResult r = timecat::run_command(command, args, opts);
  std::cout << r.out;
  std::cerr << r.err;
  return r.exit_code;
}
