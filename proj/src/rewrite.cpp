#include "timecat/rewrite.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "timecat/error.hpp"

namespace timecat {

void RuleSet::add(RewriteRule rule) {
  if (!rule.measure) throw Error(ErrorCode::kRuleRejected, "rule " + rule.name + " declares no decreasing measure");
  if (!rule.candidates) throw Error(ErrorCode::kRuleRejected, "rule " + rule.name + " has no candidates function");
  for (const auto& r : rules_)
    if (r.name == rule.name) throw Error(ErrorCode::kDuplicateName, "duplicate rule " + rule.name);
  rules_.push_back(std::move(rule));
}

void RuleSet::remove(const std::string& name) {
  auto it = std::find_if(rules_.begin(), rules_.end(), [&](const RewriteRule& r) { return r.name == name; });
  if (it == rules_.end()) throw Error(ErrorCode::kUnknownName, "no rule named " + name);
  rules_.erase(it);
}

std::vector<std::string> RuleSet::names() const {
  std::vector<std::string> out;
  for (const auto& r : rules_) out.push_back(r.name);
  return out;
}

namespace {

const CellGen* cell_of(const DoubleSignature& s, const Slice& sl) { return s.find_cell(sl.gen.name); }

CellKind kind_of(const DoubleSignature& s, const Slice& sl) {
  const CellGen* c = cell_of(s, sl);
  return c ? c->kind : CellKind::kGenerator;
}

// Slice-level view shared by the rules.
struct View {
  const DoubleSignature& s;
  const SliceTerm& t;
  Dataflow df;

  View(const DoubleSignature& sig, const SliceTerm& term) : s(sig), t(term), df(dataflow(term)) {}

  const Slice& at(std::size_t i) const { return t.slices()[i]; }
  const CellGen* cell(std::size_t i) const { return cell_of(s, at(i)); }
  bool is(std::size_t i, CellKind k) const {
    const CellGen* c = cell(i);
    return c && c->kind == k;
  }
  bool produced_by(std::size_t i, std::size_t input, int producer, std::size_t pos) const {
    const auto& port = df.inputs[i][input];
    return port.producer == producer && port.producer_pos == pos;
  }
  int producer(std::size_t i, std::size_t input) const { return df.inputs[i][input].producer; }
  std::size_t offset(std::size_t i) const { return at(i).offset(); }
  // Object carried by a wait cell.
  std::string wait_object(std::size_t i) const { return cell(i)->boundary.u[0].name; }
};

const TwoCell* two_cell(const DoubleSignature& s, const std::string& name, std::optional<TwoCell>& store) {
  const CellGen* c = s.find_cell(name);
  if (!c) return nullptr;
  store = tilt_cell(*c);
  return &*store;
}

struct Arranged {
  SliceTerm term;
  std::vector<std::size_t> id;

  std::size_t pos(std::size_t original) const {
    return static_cast<std::size_t>(std::find(id.begin(), id.end(), original) - id.begin());
  }
  bool move(std::size_t from, std::size_t to) {
    if (from == to) return true;
    auto moved = move_slice(term, from, to);
    if (!moved) return false;
    term = std::move(*moved);
    const std::size_t v = id[from];
    id.erase(id.begin() + static_cast<std::ptrdiff_t>(from));
    id.insert(id.begin() + static_cast<std::ptrdiff_t>(to), v);
    return true;
  }
};

// Interchanges slices so that `block` (indices into t, in the wanted order)
// becomes contiguous. Returns the rearranged term and the block's start.
std::optional<std::pair<SliceTerm, std::size_t>> gather(const SliceTerm& t, const std::vector<std::size_t>& block) {
  Arranged a{t, std::vector<std::size_t>(t.size())};
  std::iota(a.id.begin(), a.id.end(), 0);
  for (std::size_t r = block.size() - 1; r-- > 0;) {
    std::size_t cur = a.pos(block[r]);
    std::size_t head = a.pos(block[r + 1]);
    if (cur > head) {
      if (!a.move(cur, head)) return std::nullopt;
      continue;
    }
    // Push what lies in between past the end of the gathered suffix...
    for (std::size_t x = head; x-- > cur + 1;) a.move(x, a.pos(block.back()));
    // ...or before the slice being attached.
    cur = a.pos(block[r]);
    head = a.pos(block[r + 1]);
    for (std::size_t x = cur + 1; x < head; ++x)
      if (a.move(x, cur)) ++cur;
    cur = a.pos(block[r]);
    head = a.pos(block[r + 1]);
    if (cur + 1 != head && !a.move(cur, head - 1)) return std::nullopt;
  }
  const std::size_t start = a.pos(block.front());
  for (std::size_t i = 0; i < block.size(); ++i)
    if (a.pos(block[i]) != start + i) return std::nullopt;
  return std::pair{std::move(a.term), start};
}

SliceTerm replace_window(const SliceTerm& t, std::size_t start, std::size_t len,
                         const std::vector<std::pair<TwoCell, std::size_t>>& layers) {
  std::vector<Slice> out(t.slices().begin(), t.slices().begin() + static_cast<std::ptrdiff_t>(start));
  const SliceTerm mid = build_term(t.slices()[start].input(), layers);
  out.insert(out.end(), mid.slices().begin(), mid.slices().end());
  out.insert(out.end(), t.slices().begin() + static_cast<std::ptrdiff_t>(start + len), t.slices().end());
  return SliceTerm(t.dom(), t.cod(), std::move(out));
}

// Gathers `block`, checks the window offsets against `expected` (relative
// to the first block slice's frontier), and substitutes `rhs` built by the
// callback from the window's base offset.
using RhsBuilder = std::function<std::optional<std::vector<std::pair<TwoCell, std::size_t>>>(std::size_t base)>;

void try_redex(const SliceTerm& t, const std::vector<std::size_t>& block,
               const std::function<std::optional<std::size_t>(const std::vector<Slice>&)>& base_of,
               const RhsBuilder& rhs, std::vector<SliceTerm>& out) {
  auto g = gather(t, block);
  if (!g) return;
  const auto& [term, start] = *g;
  const std::vector<Slice> window(term.slices().begin() + static_cast<std::ptrdiff_t>(start),
                                  term.slices().begin() + static_cast<std::ptrdiff_t>(start + block.size()));
  auto base = base_of(window);
  if (!base) return;
  auto layers = rhs(*base);
  if (!layers) return;
  try {
    out.push_back(replace_window(term, start, block.size(), *layers));
  } catch (const Error&) {
    // Offsets matched but the window did not type; not a redex.
  }
}

std::vector<SliceTerm> involution_candidates(const DoubleSignature& s, const SliceTerm& t) {
  View v(s, t);
  std::vector<SliceTerm> out;
  for (std::size_t j = 0; j < t.size(); ++j) {
    if (!v.is(j, CellKind::kBraid)) continue;
    const int i = v.producer(j, 0);
    if (i < 0 || !v.is(static_cast<std::size_t>(i), CellKind::kBraid)) continue;
    if (!v.produced_by(j, 0, i, 0) || !v.produced_by(j, 1, i, 1)) continue;
    try_redex(
        t, {static_cast<std::size_t>(i), j},
        [](const std::vector<Slice>& w) -> std::optional<std::size_t> {
          if (w[0].offset() != w[1].offset()) return std::nullopt;
          return w[0].offset();
        },
        [](std::size_t) { return std::vector<std::pair<TwoCell, std::size_t>>{}; }, out);
  }
  return out;
}

bool is_unary_generator(const View& v, std::size_t i) {
  const CellGen* c = v.cell(i);
  return c && c->kind == CellKind::kGenerator && c->boundary.u.size() == 1 && c->boundary.v.size() == 1;
}

std::vector<SliceTerm> naturality_candidates(const DoubleSignature& s, const SliceTerm& t) {
  View v(s, t);
  std::vector<SliceTerm> out;
  for (std::size_t j = 0; j < t.size(); ++j) {
    if (!v.is(j, CellKind::kBraid)) continue;
    const auto& braid = v.cell(j)->boundary.u;
    // Top variant: generator on the upper wire, waits on the lower one.
    if (int g = v.producer(j, 0); g >= 0 && is_unary_generator(v, static_cast<std::size_t>(g))) {
      const auto gi = static_cast<std::size_t>(g);
      const CellGen* gc = v.cell(gi);
      const std::size_t dur = gc->boundary.h.size();
      const std::string z = braid[1].name;
      std::vector<std::size_t> waits;
      bool ok = v.produced_by(j, 0, g, dur);
      for (std::size_t k = 1; ok && k <= dur; ++k) {
        const int w = v.producer(gi, k);
        ok = w >= 0 && v.is(static_cast<std::size_t>(w), CellKind::kWait) &&
             v.wait_object(static_cast<std::size_t>(w)) == z && v.produced_by(gi, k, w, 0) &&
             (k == 1 || v.produced_by(static_cast<std::size_t>(w), 0, static_cast<int>(waits.back()), 1));
        if (ok) waits.push_back(static_cast<std::size_t>(w));
      }
      if (ok && dur > 0) ok = v.produced_by(j, 1, static_cast<int>(waits.back()), 1);
      if (ok) {
        std::vector<std::size_t> block = waits;
        block.push_back(gi);
        block.push_back(j);
        const std::string x = gc->boundary.u[0].name;
        try_redex(
            t, block,
            [dur](const std::vector<Slice>& w) -> std::optional<std::size_t> {
              const std::size_t p = w[dur].offset();
              for (std::size_t k = 1; k <= dur; ++k)
                if (w[k - 1].offset() != p + k) return std::nullopt;
              if (w[dur + 1].offset() != p + dur) return std::nullopt;
              return p;
            },
            [&](std::size_t p) -> std::optional<std::vector<std::pair<TwoCell, std::size_t>>> {
              std::optional<TwoCell> sb, sw;
              const TwoCell* b = two_cell(s, braid_cell_name(x, z), sb);
              const TwoCell* wz = two_cell(s, wait_cell_name(z), sw);
              if (!b || (dur > 0 && !wz)) return std::nullopt;
              std::vector<std::pair<TwoCell, std::size_t>> layers{{*b, p}, {tilt_cell(*gc), p + 1}};
              for (std::size_t k = 1; k <= dur; ++k) layers.emplace_back(*wz, p + k - 1);
              return layers;
            },
            out);
      }
    }
    // Bottom variant: waits on the upper wire, generator on the lower one.
    if (int g = v.producer(j, 1); g >= 0 && is_unary_generator(v, static_cast<std::size_t>(g))) {
      const auto gi = static_cast<std::size_t>(g);
      const CellGen* gc = v.cell(gi);
      const std::size_t dur = gc->boundary.h.size();
      const std::string z = braid[0].name;
      std::vector<std::size_t> waits;
      bool ok = v.produced_by(j, 1, g, dur);
      for (std::size_t k = 1; ok && k <= dur; ++k) {
        const int w = v.df.consumers[gi][k - 1];
        ok = w >= 0 && v.is(static_cast<std::size_t>(w), CellKind::kWait) &&
             v.wait_object(static_cast<std::size_t>(w)) == z && v.produced_by(static_cast<std::size_t>(w), 1, g, k - 1) &&
             (k == 1 || v.produced_by(static_cast<std::size_t>(w), 0, static_cast<int>(waits.back()), 1));
        if (ok) waits.push_back(static_cast<std::size_t>(w));
      }
      if (ok && dur > 0) ok = v.produced_by(j, 0, static_cast<int>(waits.back()), 1);
      if (ok) {
        std::vector<std::size_t> block{gi};
        block.insert(block.end(), waits.begin(), waits.end());
        block.push_back(j);
        const std::string x = gc->boundary.u[0].name;
        try_redex(
            t, block,
            [dur](const std::vector<Slice>& w) -> std::optional<std::size_t> {
              if (w[0].offset() == 0) return std::nullopt;
              const std::size_t p = w[0].offset() - 1;
              for (std::size_t k = 1; k <= dur; ++k)
                if (w[k].offset() != p + k - 1) return std::nullopt;
              if (w[dur + 1].offset() != p + dur) return std::nullopt;
              return p;
            },
            [&](std::size_t p) -> std::optional<std::vector<std::pair<TwoCell, std::size_t>>> {
              std::optional<TwoCell> sb, sw;
              const TwoCell* b = two_cell(s, braid_cell_name(z, x), sb);
              const TwoCell* wz = two_cell(s, wait_cell_name(z), sw);
              if (!b || (dur > 0 && !wz)) return std::nullopt;
              std::vector<std::pair<TwoCell, std::size_t>> layers{{*b, p}};
              for (std::size_t k = 1; k <= dur; ++k) layers.emplace_back(*wz, p + k);
              layers.emplace_back(tilt_cell(*gc), p);
              return layers;
            },
            out);
      }
    }
  }
  return out;
}

std::vector<SliceTerm> yang_baxter_candidates(const DoubleSignature& s, const SliceTerm& t) {
  View v(s, t);
  std::vector<SliceTerm> out;
  for (std::size_t j3 = 0; j3 < t.size(); ++j3) {
    if (!v.is(j3, CellKind::kBraid)) continue;
    const int j2 = v.producer(j3, 0), j1 = v.producer(j3, 1);
    if (j1 < 0 || j2 < 0 || !v.is(static_cast<std::size_t>(j1), CellKind::kBraid) ||
        !v.is(static_cast<std::size_t>(j2), CellKind::kBraid))
      continue;
    if (!v.produced_by(j3, 0, j2, 1) || !v.produced_by(j3, 1, j1, 1) ||
        !v.produced_by(static_cast<std::size_t>(j2), 1, j1, 0))
      continue;
    const auto& bc = v.cell(static_cast<std::size_t>(j1))->boundary.u;
    const std::string a = v.cell(static_cast<std::size_t>(j2))->boundary.u[0].name;
    const std::string b = bc[0].name, c = bc[1].name;
    try_redex(
        t, {static_cast<std::size_t>(j1), static_cast<std::size_t>(j2), j3},
        [](const std::vector<Slice>& w) -> std::optional<std::size_t> {
          const std::size_t p = w[1].offset();
          if (w[0].offset() != p + 1 || w[2].offset() != p + 1) return std::nullopt;
          return p;
        },
        [&](std::size_t p) -> std::optional<std::vector<std::pair<TwoCell, std::size_t>>> {
          std::optional<TwoCell> s1, s2, s3;
          const TwoCell* ab = two_cell(s, braid_cell_name(a, b), s1);
          const TwoCell* ac = two_cell(s, braid_cell_name(a, c), s2);
          const TwoCell* bcx = two_cell(s, braid_cell_name(b, c), s3);
          if (!ab || !ac || !bcx) return std::nullopt;
          return std::vector<std::pair<TwoCell, std::size_t>>{{*ab, p}, {*ac, p + 1}, {*bcx, p}};
        },
        out);
  }
  return out;
}

std::vector<SliceTerm> wait_slide_candidates(const DoubleSignature& s, const SliceTerm& t) {
  View v(s, t);
  std::vector<SliceTerm> out;
  for (std::size_t g = 0; g < t.size(); ++g) {
    const CellGen* gc = v.cell(g);
    if (!gc || gc->kind == CellKind::kWait) continue;
    const std::size_t n = gc->boundary.u.size(), m = gc->boundary.v.size(), dur = gc->boundary.h.size();
    if (n == 0 || m == 0) continue;
    // waits[k] feeds input k; each wait's time input comes from the one below.
    std::vector<std::size_t> waits;
    bool ok = true;
    for (std::size_t k = 0; ok && k < n; ++k) {
      const int w = v.producer(g, k);
      ok = w >= 0 && v.is(static_cast<std::size_t>(w), CellKind::kWait) && v.produced_by(g, k, w, 1);
      if (ok) waits.push_back(static_cast<std::size_t>(w));
    }
    for (std::size_t k = 0; ok && k + 1 < n; ++k)
      ok = v.produced_by(waits[k], 1, static_cast<int>(waits[k + 1]), 0);
    if (!ok) continue;
    std::vector<std::size_t> block(waits.rbegin(), waits.rend());
    block.push_back(g);
    try_redex(
        t, block,
        [n](const std::vector<Slice>& w) -> std::optional<std::size_t> {
          const std::size_t p = w[n - 1].offset();
          for (std::size_t k = 0; k < n; ++k)
            if (w[n - 1 - k].offset() != p + k) return std::nullopt;
          if (w[n].offset() != p + 1) return std::nullopt;
          return p;
        },
        [&](std::size_t p) -> std::optional<std::vector<std::pair<TwoCell, std::size_t>>> {
          std::vector<std::pair<TwoCell, std::size_t>> layers{{tilt_cell(*gc), p}};
          for (std::size_t k = m; k-- > 0;) {
            std::optional<TwoCell> sw;
            const TwoCell* w = two_cell(s, wait_cell_name(gc->boundary.v[k].name), sw);
            if (!w) return std::nullopt;
            layers.emplace_back(*w, p + dur + k);
          }
          return layers;
        },
        out);
  }
  return out;
}

// Transitive closure over vertical-wire dataflow.
std::vector<std::vector<bool>> reachability(const SliceTerm& t, const Dataflow& df) {
  const std::size_t n = t.size();
  std::vector<std::vector<bool>> down(n, std::vector<bool>(n, false));
  for (std::size_t i = n; i-- > 0;) {
    const auto& cod = t.slices()[i].gen.cod;
    for (std::size_t j = 0; j < df.consumers[i].size(); ++j) {
      const int c = df.consumers[i][j];
      if (c < 0 || cod[j].kind != EdgeKind::kVertical) continue;
      const auto ci = static_cast<std::size_t>(c);
      down[i][ci] = true;
      for (std::size_t k = 0; k < n; ++k)
        if (down[ci][k]) down[i][k] = true;
    }
  }
  return down;
}

}  // namespace

Measure quotient_measure(const DoubleSignature& s, const SliceTerm& t) {
  const Dataflow df = dataflow(t);
  const auto down = reachability(t, df);
  const std::size_t n = t.size();
  std::vector<CellKind> kind(n);
  for (std::size_t i = 0; i < n; ++i) kind[i] = kind_of(s, t.slices()[i]);
  std::vector<std::int64_t> braids, waits;
  for (std::size_t i = 0; i < n; ++i) {
    std::int64_t count = 0;
    if (kind[i] == CellKind::kBraid) {
      for (std::size_t k = 0; k < n; ++k) count += down[k][i] && kind[k] == CellKind::kGenerator;
      braids.push_back(count);
    } else if (kind[i] == CellKind::kWait) {
      for (std::size_t k = 0; k < n; ++k) count += down[i][k] && kind[k] != CellKind::kWait;
      waits.push_back(count);
    }
  }
  std::sort(braids.rbegin(), braids.rend());
  std::sort(waits.rbegin(), waits.rend());
  std::int64_t offsets = 0;
  if (!braids.empty())
    for (const auto& sl : normalize(t).slices())
      if (kind_of(s, sl) == CellKind::kBraid) offsets += static_cast<std::int64_t>(sl.offset());
  return {braids, waits, {static_cast<std::int64_t>(n)}, {offsets}};
}

RewriteRule braid_involution_rule() { return {kBraidInvolution, involution_candidates, quotient_measure}; }
RewriteRule braid_naturality_rule() { return {kBraidNaturality, naturality_candidates, quotient_measure}; }
RewriteRule yang_baxter_rule() { return {kYangBaxter, yang_baxter_candidates, quotient_measure}; }
RewriteRule wait_slide_rule() { return {kWaitSlide, wait_slide_candidates, quotient_measure}; }

RuleSet default_rules() {
  RuleSet rules;
  rules.add(braid_involution_rule());
  rules.add(braid_naturality_rule());
  rules.add(yang_baxter_rule());
  rules.add(wait_slide_rule());
  return rules;
}

PinwheelCell apply_quotient_rewrites(const DoubleSignature& s, const PinwheelCell& c, const RuleSet& rules,
                                     std::vector<std::string>* trace) {
  SliceTerm term = c.body;
  const auto& rs = rules.rules();
  for (;;) {
    std::vector<Measure> now;
    for (const auto& r : rs) now.push_back(r.measure(s, term));
    bool stepped = false;
    for (std::size_t i = 0; i < rs.size() && !stepped; ++i) {
      for (auto& cand : rs[i].candidates(s, term)) {
        bool accept = rs[i].measure(s, cand) < now[i];
        for (std::size_t j = 0; accept && j < rs.size(); ++j)
          if (j != i) accept = !(now[j] < rs[j].measure(s, cand));
        if (!accept) continue;
        term = std::move(cand);
        if (trace) trace->push_back(rs[i].name);
        stepped = true;
        break;
      }
    }
    if (!stepped) break;
  }
  return PinwheelCell::make(c.boundary, normalize(term));
}

bool cells_equivalent(const DoubleSignature& s, const PinwheelCell& a, const PinwheelCell& b, const RuleSet& rules) {
  if (!(a.boundary == b.boundary)) return false;
  return cells_equal(apply_quotient_rewrites(s, a, rules), apply_quotient_rewrites(s, b, rules));
}

}  // namespace timecat
