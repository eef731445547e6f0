// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <deque>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "golden.hpp"
#include "timecat/commands.hpp"
#include "timecat/dag.hpp"
#include "timecat/duoid.hpp"
#include "timecat/graded.hpp"
#include "timecat/pinwheel.hpp"
#include "timecat/tiling.hpp"

namespace timecat {
namespace {

using D = Diagram;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

// ---- 1. duoid ----

Outcome duoid_suite() {
  Outcome o;
  const auto report = check_duoid_laws(max_plus_spec(6), 10000, 1);
  o.require(report.ok(), report.ok() ? "" : report.violations.front().law);

  // Lax distributivity by hand on the full grid.
  std::size_t grid = 0;
  for (std::uint64_t a = 0; a <= 6; ++a)
    for (std::uint64_t b = 0; b <= 6; ++b)
      for (std::uint64_t c = 0; c <= 6; ++c)
        for (std::uint64_t d = 0; d <= 6; ++d, ++grid)
          o.require(std::max(a, c) + std::max(b, d) >= std::max(a + b, c + d) &&
                        par_grade(seq_grade(a, b), seq_grade(c, d)) <= seq_grade(par_grade(a, c), par_grade(b, d)),
                    "lax distributivity on the grid");
  o.require(grid == 2401, "grid size");

  auto wrong = max_plus_spec(6);
  wrong.par = [](const Grade& a, const Grade& b) { return std::min(a, b); };
  const auto bad = check_duoid_laws(wrong, 10000, 1);
  const auto* v = bad.find("lax-distributivity");
  o.require(v && v->witness.size() == 4, "min-instead-of-max not rejected");
  if (v) {
    std::vector<std::uint64_t> w;
    for (const auto& g : v->witness) w.push_back(static_cast<std::uint64_t>(g.value()));
    o.require(std::min(w[0] + w[1], w[2] + w[3]) > std::min(w[0], w[2]) + std::min(w[1], w[3]), "witness does not refute");
    o.detail = "witness (" + std::to_string(w[0]) + "," + std::to_string(w[1]) + "," + std::to_string(w[2]) + "," +
               std::to_string(w[3]) + ")";
  }
  return o;
}

// ---- 2. graded axioms ----

Outcome axiom_suite() {
  Outcome o;
  const auto results = axioms_check(testing::mascarpone_polygraph(), 200, 7);
  o.require(results.size() == 10, "ten axioms");
  std::size_t total = 0;
  for (const auto& r : results) {
    total += r.checked;
    o.require(r.checked >= 200, "axiom " + r.axiom + " under-sampled");
    o.require(r.failed == 0, "axiom " + r.axiom + ": " + r.first_failure.value_or(""));
  }
  if (o.pass) o.detail = std::to_string(total) + " instances";
  return o;
}

// ---- 3. weak interchange ----

Outcome interchange_suite() {
  Outcome o;
  for (std::uint64_t a = 0; a <= 4; ++a)
    for (std::uint64_t b = 0; b <= 4; ++b)
      for (std::uint64_t c = 0; c <= 4; ++c)
        for (std::uint64_t d = 0; d <= 4; ++d)
          o.require(std::max(a + c, b + d) <= std::max(a, b) + std::max(c, d), "grade inequality");

  const TimedPolygraph p = testing::mascarpone_polygraph();
  const DoubleSignature s = draw(p);
  const DiagramSampler sampler{p};
  std::mt19937_64 rng(3);
  for (int n = 0; n < 100; ++n) {
    const D f = sampler.from(sampler.random_objects(2, rng), 2, rng);
    const D g = sampler.from(sampler.random_objects(2, rng), 2, rng);
    const D h = sampler.from(f.cod(), 2, rng);
    const D k = sampler.from(g.cod(), 2, rng);
    const D lhs = D::par(D::seq(f, h), D::seq(g, k));
    const D rhs = D::seq(D::par(f, g), D::par(h, k));
    o.require(rhs.grade() >= lhs.grade(), "grade(Seq(Par,Par)) < grade(Par(Seq,Seq))");
    o.require(weak_interchange(lhs) == rhs, "rewrite shape");
    o.require(eq_semantic(s, D::regrade(lhs, rhs.grade()), rhs), "not semantic: " + rhs.str());
    o.require(eq_semantic(s, weak_interchange(rhs), rhs), "reverse not semantic: " + rhs.str());
  }
  return o;
}

// ---- 4. pinwheel schedule ----

// Guillotine cuts straight from the definition.
bool cuttable(const Rect& box, const std::vector<Rect>& tiles) {
  std::vector<Rect> inside;
  for (const auto& r : tiles)
    if (r.x0 >= box.x0 && r.x1 <= box.x1 && r.y0 >= box.y0 && r.y1 <= box.y1) inside.push_back(r);
  if (inside.size() <= 1) return true;
  for (std::int64_t x = box.x0 + 1; x < box.x1; ++x) {
    bool clean = true;
    for (const auto& r : inside) clean &= !(r.x0 < x && x < r.x1);
    if (clean && cuttable({box.x0, x, box.y0, box.y1}, inside) && cuttable({x, box.x1, box.y0, box.y1}, inside))
      return true;
  }
  for (std::int64_t y = box.y0 + 1; y < box.y1; ++y) {
    bool clean = true;
    for (const auto& r : inside) clean &= !(r.y0 < y && y < r.y1);
    if (clean && cuttable({box.x0, box.x1, box.y0, y}, inside) && cuttable({box.x0, box.x1, y, box.y1}, inside))
      return true;
  }
  return false;
}

Outcome schedule_suite() {
  Outcome o;
  const TheoryFile f = load_theory(golden::source("fixtures/example13.tpg"));
  const Tiling t = f.find_tiling("pinwheel")->tiling();
  const DoubleSignature s = draw(f.polygraph);

  o.require(!cmd_guillotine(f, "pinwheel"), "pinwheel reported binary-composable");
  std::vector<Rect> rects;
  for (const auto& tile : t.tiles) rects.push_back(tile.rect);
  o.require(!cuttable({0, t.width, 0, t.height}, rects), "oracle found a guillotine cut");

  const SweepResult sweep = cmd_sweep(f, "pinwheel");
  o.require(duration(sweep.cell) == Grade(4), "sweep duration");

  const ScheduleReport r = cmd_schedule(f, "pinwheel");
  // Longest path by relaxation in index order, repeated to a fixpoint.
  std::vector<std::uint64_t> finish(r.dag.nodes.size());
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < r.dag.nodes.size(); ++i) {
      std::uint64_t start = 0;
      for (const auto& [a, b] : r.dag.edges)
        if (b == i) start = std::max(start, finish[a]);
      const std::uint64_t end = start + static_cast<std::uint64_t>(r.dag.nodes[i].duration.value());
      if (end != finish[i]) finish[i] = end, changed = true;
    }
  }
  const std::uint64_t longest = finish.empty() ? 0 : *std::max_element(finish.begin(), finish.end());
  o.require(r.makespan == Grade(3) && longest == 3, "makespan " + r.makespan.str());
  o.require(r.grade == Grade(4), "width " + r.grade.str());
  const std::map<std::string, std::uint64_t> expected = {{"f", 0}, {"g", 0}, {"a", 1}, {"h", 1}, {"k", 2}};
  for (std::size_t i = 0; i < r.dag.nodes.size(); ++i)
    if (auto it = expected.find(r.dag.nodes[i].name); it != expected.end())
      o.require(r.starts[i] == Grade(it->second), "start of " + it->first);

  const CommandResult text = run_command("schedule", {golden::source("fixtures/example13.tpg"), "pinwheel"}, {});
  o.require(text.out.rfind("grade 4\nmakespan 3\n", 0) == 0, "cmd_schedule output");
  if (o.pass) o.detail = "width 4, makespan 3";
  return o;
}

// ---- 5. pinwheel algebra ----

Outcome pinwheel_suite() {
  Outcome o;
  const TimedPolygraph p = testing::mascarpone_polygraph();
  const DoubleSignature s = draw(p);
  const DiagramSampler sampler{p};
  std::mt19937_64 rng(17);
  auto from = [&](const Objects& dom) { return sampler.from(dom, 2, rng); };
  auto fresh = [&] { return from(sampler.random_objects(2, rng)); };
  auto at = [&](const D& d, const Grade& g) { return compile(s, D::regrade(d, g)); };

  for (int n = 0; n < 100; ++n) {
    // Horizontal chain a | b | c.
    const D da = fresh(), db = from(da.cod()), dc = from(db.cod());
    const auto a = compile(s, da), b = compile(s, db), c = compile(s, dc);
    o.require(cells_equal(hcompose(hcompose(a, b), c), hcompose(a, hcompose(b, c))), "hcompose associativity");
    o.require(cells_equal(hcompose(identity_cell_h(a.u()), a), a), "hcompose left unit");
    o.require(cells_equal(hcompose(a, identity_cell_h(a.v())), a), "hcompose right unit");
    o.require(duration(hcompose(a, b)) == seq_grade(duration(a), duration(b)), "duration under hcompose");

    // Vertical stack of three cells sharing a duration.
    const D va = fresh(), vb = fresh(), vc = fresh();
    const Grade g = par_grade(va.grade(), par_grade(vb.grade(), vc.grade()));
    const auto x = at(va, g), y = at(vb, g), z = at(vc, g);
    o.require(cells_equal(vcompose(vcompose(x, y), z), vcompose(x, vcompose(y, z))), "vcompose associativity");
    o.require(cells_equal(vcompose(identity_cell_v(x.k()), x), x), "vcompose top unit");
    o.require(cells_equal(vcompose(x, identity_cell_v(x.h())), x), "vcompose bottom unit");
    o.require(duration(vcompose(x, y)) == g, "duration under vcompose");

    // Interchange on a 2x2 block.
    const D d1 = fresh(), d3 = fresh();
    const D d2 = from(d1.cod()), d4 = from(d3.cod());
    const Grade left = par_grade(d1.grade(), d3.grade()), right = par_grade(d2.grade(), d4.grade());
    const auto c1 = at(d1, left), c2 = at(d2, right), c3 = at(d3, left), c4 = at(d4, right);
    o.require(cells_equal(hcompose(vcompose(c1, c3), vcompose(c2, c4)), vcompose(hcompose(c1, c2), hcompose(c3, c4))),
              "interchange law");
  }
  return o;
}

// ---- 6. monad laws ----

// Routes between three stages with alternatives at every duration.
TimedPolygraph routes() {
  TimedPolygraph p;
  p.objects = {"A", "B", "C"};
  p.generators = {{"p", {"A"}, {"B"}, 2}, {"q", {"A"}, {"B"}, 1}, {"r", {"B"}, {"C"}, 1},
                  {"s", {"B"}, {"C"}, 3}, {"t", {"A"}, {"C"}, 2}, {"u", {"C"}, {"A"}, 1},
                  {"m", {"A", "B"}, {"C"}, 2}};
  return p;
}

// Every diagram X -> Y that chains up to three generators within `budget`.
std::vector<D> chains(const TimedPolygraph& p, const Objects& x, const Objects& y, const Grade& budget, int len = 3) {
  std::vector<D> out;
  std::function<void(const D&, int)> grow = [&](const D& d, int left) {
    if (d.cod() == y && d.grade() <= budget) out.push_back(D::regrade(d, budget));
    if (left == 0) return;
    for (const auto& g : p.generators)
      if (g.inputs == d.cod() && seq_grade(d.grade(), g.time) <= budget) grow(D::seq(d, D::gen(g)), left - 1);
  };
  for (const auto& g : p.generators)
    if (g.inputs == x && g.time <= budget) grow(D::gen(g), len - 1);
  return out;
}

Outcome monad_suite() {
  Outcome o;
  const TimedPolygraph p = routes();
  const DoubleSignature s = draw(p);
  const auto unit = pinwheel_unit(s);
  const DiagramSampler sampler{p};
  std::mt19937_64 rng(29);

  std::map<std::string, std::vector<PinwheelCell>> options;
  for (const auto& g : p.generators)
    for (const auto& d : chains(p, g.inputs, g.outputs, g.time)) options[g.name].push_back(compile(s, d));
  auto substitution = [&] {
    auto sigma = unit;
    for (const auto& [name, imgs] : options)
      sigma.insert_or_assign(name, imgs[std::uniform_int_distribution<std::size_t>(0, imgs.size() - 1)(rng)]);
    return sigma;
  };

  std::size_t varied = 0;
  for (int n = 0; n < 50; ++n) {
    const PinwheelCell c = compile(s, sampler.from(sampler.random_objects(2, rng), 2, rng));
    const auto sigma = substitution(), tau = substitution();
    o.require(cells_equal(flatten(s, c, unit), c), "right unit");
    for (const auto& g : p.generators)
      o.require(cells_equal(flatten(s, unit.at(g.name), sigma), sigma.at(g.name)), "left unit at " + g.name);
    std::map<std::string, PinwheelCell> composite;
    for (const auto& [name, img] : sigma) composite.insert_or_assign(name, flatten(s, img, tau));
    const auto lhs = flatten(s, flatten(s, c, sigma), tau);
    o.require(cells_equal(lhs, flatten(s, c, composite)), "associativity");
    varied += !cells_equal(lhs, c);
  }
  o.require(varied > 0, "substitutions never changed a cell");
  if (o.pass) o.detail = std::to_string(varied) + "/50 cells rewritten";
  return o;
}

// ---- 7. normal form ----

TwoCell two(const std::string& name, const std::vector<std::string>& dom, const std::vector<std::string>& cod) {
  return TwoCell{name, vpath(dom), vpath(cod)};
}

SliceTerm random_term(std::mt19937_64& rng, const std::vector<TwoCell>& alphabet, std::size_t len) {
  std::vector<std::string> start;
  for (int i = 0; i < 3; ++i) start.push_back(rng() % 2 ? "a" : "b");
  std::vector<std::pair<TwoCell, std::size_t>> layers;
  Path frontier = vpath(start);
  for (std::size_t n = 0; n < len; ++n) {
    std::vector<std::pair<TwoCell, std::size_t>> moves;
    for (const auto& c : alphabet)
      for (std::size_t off = 0; off + c.dom.size() <= frontier.size(); ++off)
        if (frontier.slice(off, c.dom.size()) == c.dom && frontier.size() - c.dom.size() + c.cod.size() <= 5)
          moves.emplace_back(c, off);
    if (moves.empty()) break;
    layers.push_back(moves[rng() % moves.size()]);
    frontier = build_term(vpath(start), layers).cod();
  }
  return build_term(vpath(start), layers);
}

std::set<std::vector<Slice>> interchange_class(const SliceTerm& t) {
  std::set<std::vector<Slice>> seen{t.slices()};
  std::deque<SliceTerm> todo{t};
  while (!todo.empty()) {
    const SliceTerm cur = todo.front();
    todo.pop_front();
    for (std::size_t i = 0; i + 1 < cur.size(); ++i)
      if (auto next = move_slice(cur, i + 1, i); next && seen.insert(next->slices()).second) todo.push_back(*next);
  }
  return seen;
}

Outcome normal_form_suite() {
  Outcome o;
  const std::vector<TwoCell> sided = {two("m", {"a", "b"}, {"a"}), two("n", {"a"}, {"a", "b"}),
                                      two("x", {"a"}, {"b"}), two("y", {"b"}, {"a"})};
  auto open = sided;
  open.push_back(two("e", {}, {"b"}));
  open.push_back(two("d", {"b"}, {}));
  std::mt19937_64 rng(31);
  std::size_t swaps = 0;
  for (int n = 0; n < 1000; ++n) {
    const bool closed = n % 2 == 0;
    const SliceTerm t = random_term(rng, closed ? sided : open, 2 + rng() % 5);
    const SliceTerm nf = normalize(t);
    o.require(normalize(nf) == nf, "not idempotent");
    o.require(interchange_class(t).count(nf.slices()) == 1, "normal form left the interchange class");
    o.require(terms_equal(t, nf), "terms_equal rejects the normal form");
    if (!closed) continue;
    for (std::size_t i = 0; i + 1 < t.size(); ++i)
      if (auto swapped = move_slice(t, i + 1, i)) {
        ++swaps;
        o.require(normalize(*swapped) == nf, "disjoint pair orders differ after normalizing");
      }
  }
  if (o.pass) o.detail = std::to_string(swaps) + " swapped pairs";
  return o;
}

// ---- 8. compilation coherence ----

Outcome coherence_suite() {
  Outcome o;
  const TimedPolygraph p = testing::mascarpone_polygraph();
  const DoubleSignature s = draw(p);
  const DiagramSampler sampler{p};
  std::mt19937_64 rng(37);
  for (int n = 0; n < 200; ++n) {
    const D d = sampler.from(sampler.random_objects(3, rng), 4, rng);
    o.require(duration(assemble_tiling(s, to_pinwheel(d))) == d.grade(), "duration != grade for " + d.str());
    o.require(cells_equal(compile(s, d), compile_compositional(s, d)), "layout disagrees for " + d.str());
    o.require(makespan(to_dag(d)) <= d.grade(), "makespan > grade for " + d.str());
  }
  return o;
}

// ---- 9. golden files ----

Outcome golden_suite() {
  Outcome o;
  const auto cases = golden::cases();
  for (const auto& c : cases) {
    const std::string got = c.produce();
    o.require(got == c.produce(), c.file + " not deterministic");
    o.require(got == golden::read(golden::path(c)), c.file + " differs from golden");
  }
  if (o.pass) o.detail = std::to_string(cases.size()) + " files";
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;  // 0: no time bound
  std::function<Outcome()> run;
};

}  // namespace
}  // namespace timecat

int main() {
  using namespace timecat;
  const std::vector<Criterion> criteria = {
      {1, "duoid laws", 1.0, duoid_suite},
      {2, "graded axioms", 30.0, axiom_suite},
      {3, "weak interchange", 0, interchange_suite},
      {4, "pinwheel schedule", 1.0, schedule_suite},
      {5, "pinwheel algebra", 0, pinwheel_suite},
      {6, "monad laws", 0, monad_suite},
      {7, "normal form", 0, normal_form_suite},
      {8, "compilation coherence", 0, coherence_suite},
      {9, "golden files", 0, golden_suite},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && secs >= c.limit_seconds) {
      o.pass = false;
      o.detail += (o.detail.empty() ? "" : "; ") + std::string("over time limit");
    }
    failures += !o.pass;
    std::printf("%s %d %-22s %7.3fs%s%s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, secs,
                c.limit_seconds > 0 ? (" (limit " + std::to_string(static_cast<int>(c.limit_seconds)) + "s)").c_str() : "",
                o.detail.empty() ? "" : ("  " + o.detail).c_str());
  }
  return failures == 0 ? 0 : 1;
}
