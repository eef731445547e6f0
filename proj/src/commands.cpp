#include "timecat/commands.hpp"

#include <fstream>
#include <map>
#include <stdexcept>

#include "timecat/serialize.hpp"

namespace timecat {

const char* kitchen_theory() {
  return "obj egg yolk white sugar mascarpone yolkmix whipped cream crema\n"
         "gen crack : egg -> yolk white @ 1\n"
         "gen beat : yolk sugar -> yolkmix @ 3\n"
         "gen whisk : white -> whipped @ 4\n"
         "gen stir : yolkmix mascarpone -> cream @ 2\n"
         "gen fold : cream whipped -> crema @ 2\n"
         "diag separate = crack * id sugar * id mascarpone ; id yolk * swap white sugar * id mascarpone\n"
         "diag mix = beat * whisk * id mascarpone ; id yolkmix * swap whipped mascarpone\n"
         "diag main = separate ; mix ; stir * id whipped ; fold\n";
}

namespace {

const Diagram* diagram_named(const TheoryFile& f, const std::string& name) {
  const DiagDecl* d = f.find_diagram(name);
  return d ? &d->diagram : nullptr;
}

const TilingDecl& tiling_named(const TheoryFile& f, const std::string& name) {
  const TilingDecl* t = f.find_tiling(name);
  if (!t) throw Error(ErrorCode::kUnknownName, "no tiling named " + name);
  return *t;
}

Tiling tiling_of(const TheoryFile& f, const std::string& name) {
  if (const Diagram* d = diagram_named(f, name)) return to_pinwheel(*d);
  if (const TilingDecl* t = f.find_tiling(name)) return t->tiling();
  throw Error(ErrorCode::kUnknownName, "no diagram or tiling named " + name);
}

std::string join(const Objects& objs) {
  std::string out;
  for (const auto& o : objs) out += (out.empty() ? "" : " ") + o;
  return out;
}

std::string join(const Path& p) {
  std::string out;
  for (const auto& w : p.wires()) out += (out.empty() ? "" : " ") + w.name;
  return out.empty() ? "ε" : out;
}

}  // namespace

Grade cmd_time(const TheoryFile& f, const std::string& name) {
  const DoubleSignature s = draw(f.polygraph);
  if (const Diagram* d = diagram_named(f, name)) {
    const Grade layout = duration(compile(s, *d));
    if (layout != d->grade())
      throw std::logic_error("layout of " + name + " lasts " + layout.str() + " but its grade is " + d->grade().str());
    return d->grade();
  }
  return duration(assemble_tiling(s, tiling_of(f, name)));
}

bool cmd_equal(const TheoryFile& f, const std::string& a, const std::string& b) {
  const Diagram* da = diagram_named(f, a);
  const Diagram* db = diagram_named(f, b);
  if (!da) throw Error(ErrorCode::kUnknownName, "no diagram named " + a);
  if (!db) throw Error(ErrorCode::kUnknownName, "no diagram named " + b);
  return eq_semantic(draw(f.polygraph), *da, *db);
}

std::string cmd_render(const TheoryFile& f, const std::string& name, const RenderSpec& spec) {
  return render_svg(draw(f.polygraph), tiling_of(f, name), spec);
}

SweepResult cmd_sweep(const TheoryFile& f, const std::string& tiling) {
  return sweep_tiling(draw(f.polygraph), tiling_named(f, tiling).tiling());
}

bool cmd_guillotine(const TheoryFile& f, const std::string& tiling) {
  return is_binary_composable(draw(f.polygraph), tiling_named(f, tiling).tiling());
}

ScheduleReport cmd_schedule(const TheoryFile& f, const std::string& name) {
  ScheduleReport r;
  if (const Diagram* d = diagram_named(f, name)) {
    r.grade = d->grade();
    r.dag = to_dag(*d);
  } else {
    const DoubleSignature s = draw(f.polygraph);
    const Tiling t = tiling_named(f, name).tiling();
    r.grade = duration(assemble_tiling(s, t));
    r.dag = to_dag(s, t);
  }
  r.makespan = makespan(r.dag);
  r.starts = asap_starts(r.dag);
  return r;
}

bool LawsReport::ok() const {
  if (!duoid.ok()) return false;
  for (const auto& a : axioms)
    if (a.failed > 0) return false;
  return true;
}

LawsReport cmd_laws(const TimedPolygraph& p, std::size_t samples, std::uint64_t seed) {
  return LawsReport{check_duoid_laws(max_plus_spec(), 10000, seed), axioms_check(p, samples, seed)};
}

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void arity(const std::vector<std::string>& args, std::size_t n, const std::string& usage) {
  if (args.size() != n) throw UsageError("usage: timecat " + usage);
}

std::string run(const std::string& command, const std::vector<std::string>& args, const CommandOptions& opts,
                int& exit_code) {
  auto load = [&] {
    try {
      return load_theory(args[0]);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kInvalidArgument) throw UsageError(e.what());
      throw;
    }
  };

  if (command == "check") {
    arity(args, 1, "check FILE");
    const TheoryFile f = load();
    for (const auto& problem : validate_polygraph(f.polygraph)) throw Error(ErrorCode::kBoundaryMismatch, problem);
    const DoubleSignature s = draw(f.polygraph);
    Json j = {{"objects", f.polygraph.objects.size()}, {"generators", f.polygraph.generators.size()}};
    Json diags = Json::array(), tilings = Json::array();
    std::string text = "objects " + std::to_string(f.polygraph.objects.size()) + "\ngenerators " +
                       std::to_string(f.polygraph.generators.size()) + "\n";
    for (const auto& d : f.diagrams) {
      const Typing& t = d.diagram.typing();
      diags.push_back({{"name", d.name}, {"dom", t.dom}, {"cod", t.cod}, {"grade", grade_json(t.grade)}});
      text += "diag " + d.name + " : " + join(t.dom) + " -> " + join(t.cod) + " @ " + t.grade.str() + "\n";
    }
    for (const auto& tl : f.tilings) {
      const Tiling t = tl.tiling();
      validate_tiling(s, t);
      tilings.push_back({{"name", tl.name}, {"width", t.width}, {"height", t.height}, {"tiles", t.tiles.size()}});
      text += "tiling " + tl.name + " : " + std::to_string(t.width) + "x" + std::to_string(t.height) + ", " +
              std::to_string(t.tiles.size()) + " tiles\n";
    }
    j["polygraph"] = polygraph_json(f.polygraph);
    j["diagrams"] = diags;
    j["tilings"] = tilings;
    j["ok"] = true;
    return opts.json ? canonical(j) : text + "ok\n";
  }
  if (command == "time") {
    arity(args, 2, "time FILE NAME");
    const Grade g = cmd_time(load(), args[1]);
    return opts.json ? canonical({{"name", args[1]}, {"grade", grade_json(g)}}) : g.str() + "\n";
  }
  if (command == "equal") {
    arity(args, 3, "equal FILE NAME NAME");
    const TheoryFile f = load();
    const bool eq = cmd_equal(f, args[1], args[2]);
    if (!opts.json) return eq ? "true\n" : "false\n";
    const DoubleSignature s = draw(f.polygraph);
    Json forms = Json::array();
    for (const auto* name : {&args[1], &args[2]})
      forms.push_back(slice_term_json(normalize(compile(s, f.find_diagram(*name)->diagram).body)));
    return canonical({{"names", {args[1], args[2]}}, {"equal", eq}, {"normal_forms", forms}});
  }
  if (command == "render") {
    arity(args, 2, "render FILE NAME [--out PATH]");
    const std::string svg = cmd_render(load(), args[1], opts.render);
    if (!opts.out) return svg;
    std::ofstream out(*opts.out, std::ios::binary);
    if (!(out << svg)) throw UsageError("cannot write " + *opts.out);
    return {};
  }
  if (command == "sweep") {
    arity(args, 2, "sweep FILE TILING");
    const SweepResult r = cmd_sweep(load(), args[1]);
    if (opts.json) {
      Json j = cell_json(r.cell);
      j["order"] = r.order;
      return canonical(j);
    }
    std::string order;
    for (const auto& n : r.order) order += " " + n;
    return "u: " + join(r.cell.u()) + "\nh: " + join(r.cell.h()) + "\nk: " + join(r.cell.k()) +
           "\nv: " + join(r.cell.v()) + "\nduration " + duration(r.cell).str() + "\norder" + order + "\nslices " +
           std::to_string(r.cell.body.size()) + "\n";
  }
  if (command == "guillotine") {
    arity(args, 2, "guillotine FILE TILING");
    const bool ok = cmd_guillotine(load(), args[1]);
    return opts.json ? canonical({{"tiling", args[1]}, {"guillotine", ok}}) : std::string(ok ? "true\n" : "false\n");
  }
  if (command == "schedule") {
    arity(args, 2, "schedule FILE NAME");
    const ScheduleReport r = cmd_schedule(load(), args[1]);
    if (opts.json) {
      Json j = dag_json(r.dag);
      j["grade"] = grade_json(r.grade);
      return canonical(j);
    }
    std::string text = "grade " + r.grade.str() + "\nmakespan " + r.makespan.str() + "\n";
    for (std::size_t i = 0; i < r.dag.nodes.size(); ++i)
      text += "start " + r.dag.nodes[i].name + " " + r.starts[i].str() + "\n";
    return text;
  }
  if (command == "laws") {
    if (args.size() > 1) throw UsageError("usage: timecat laws [FILE] [--samples N] [--seed S]");
    const TheoryFile f = args.empty() ? parse_theory(kitchen_theory()) : load();
    const LawsReport r = cmd_laws(f.polygraph, opts.samples, opts.seed);
    exit_code = r.ok() ? 0 : 1;
    if (opts.json) {
      Json violations = Json::array();
      for (const auto& v : r.duoid.violations) {
        Json w = Json::array();
        for (const auto& g : v.witness) w.push_back(grade_json(g));
        violations.push_back({{"law", v.law}, {"witness", w}});
      }
      Json axioms = Json::array();
      for (const auto& a : r.axioms) {
        Json entry = {{"axiom", a.axiom}, {"checked", a.checked}, {"failed", a.failed}};
        if (a.first_failure) entry["first_failure"] = *a.first_failure;
        axioms.push_back(std::move(entry));
      }
      return canonical({{"duoid", {{"tuples", r.duoid.tuples_checked}, {"violations", violations}}},
                        {"axioms", axioms},
                        {"ok", r.ok()}});
    }
    std::string text = "duoid max-plus: " + std::string(r.duoid.ok() ? "ok" : "FAILED") + " (" +
                       std::to_string(r.duoid.tuples_checked) + " tuples)\n";
    for (const auto& v : r.duoid.violations) {
      text += "  " + v.law + " fails at";
      for (const auto& g : v.witness) text += " " + g.str();
      text += "\n";
    }
    for (const auto& a : r.axioms) {
      text += "axiom " + a.axiom + ": " + std::to_string(a.checked - a.failed) + "/" + std::to_string(a.checked) + "\n";
      if (a.first_failure) text += "  " + *a.first_failure + "\n";
    }
    return text + (r.ok() ? "ok\n" : "FAILED\n");
  }
  throw UsageError("unknown command " + command +
                   "; expected check, time, equal, render, sweep, guillotine, schedule or laws");
}

}  // namespace

CommandResult run_command(const std::string& command, const std::vector<std::string>& args, const CommandOptions& opts) {
  CommandResult r;
  try {
    r.out = run(command, args, opts, r.exit_code);
  } catch (const UsageError& e) {
    r.exit_code = 2;
    r.err = std::string(e.what()) + "\n";
  } catch (const Error& e) {
    r.exit_code = 1;
    r.err = std::string("error[") + error_code_name(e.code()) + "]: " + e.what() + "\n";
  }
  return r;
}

}  // namespace timecat
