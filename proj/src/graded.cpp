#include "timecat/graded.hpp"

#include <map>
#include <set>

namespace timecat {

struct Diagram::Node {
  Kind kind = Kind::kUnitI;
  Generator gen;
  Objects objects;
  std::optional<Diagram> a, b;
  Grade target;
  std::optional<Typing> typing;
  std::optional<Error> error;
};

namespace {

std::string join(const Objects& objs) {
  if (objs.empty()) return "ε";
  std::string out;
  for (const auto& o : objs) out += (out.empty() ? "" : " ") + o;
  return out;
}

}  // namespace

Diagram Diagram::gen(const Generator& g) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kGen;
  n->gen = g;
  n->typing = Typing{g.inputs, g.outputs, g.time};
  return Diagram(std::move(n));
}

Diagram Diagram::id(Objects objects) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kId;
  n->objects = std::move(objects);
  n->typing = Typing{n->objects, n->objects, kZero};
  return Diagram(std::move(n));
}

Diagram Diagram::sym(const std::string& x, const std::string& y) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kSym;
  n->objects = {x, y};
  n->typing = Typing{{x, y}, {y, x}, kZero};
  return Diagram(std::move(n));
}

Diagram Diagram::unit_i() {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kUnitI;
  n->typing = Typing{{}, {}, kBottom};
  return Diagram(std::move(n));
}

Diagram Diagram::seq(const Diagram& a, const Diagram& b) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kSeq;
  n->a = a;
  n->b = b;
  if (a.node_->error) {
    n->error = a.node_->error;
  } else if (b.node_->error) {
    n->error = b.node_->error;
  } else if (a.cod() != b.dom()) {
    n->error = Error(ErrorCode::kBoundaryMismatch,
                     "cannot compose " + a.str() + " ending in " + join(a.cod()) + " with " + b.str() +
                         " starting at " + join(b.dom()));
  } else {
    n->typing = Typing{a.dom(), b.cod(), seq_grade(a.grade(), b.grade())};
  }
  return Diagram(std::move(n));
}

Diagram Diagram::par(const Diagram& a, const Diagram& b) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kPar;
  n->a = a;
  n->b = b;
  if (a.node_->error) {
    n->error = a.node_->error;
  } else if (b.node_->error) {
    n->error = b.node_->error;
  } else {
    Typing t{a.dom(), a.cod(), par_grade(a.grade(), b.grade())};
    t.dom.insert(t.dom.end(), b.dom().begin(), b.dom().end());
    t.cod.insert(t.cod.end(), b.cod().begin(), b.cod().end());
    n->typing = std::move(t);
  }
  return Diagram(std::move(n));
}

Diagram Diagram::regrade(const Diagram& d, Grade target) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kRegrade;
  n->a = d;
  n->target = std::move(target);
  if (d.node_->error) {
    n->error = d.node_->error;
  } else if (!grade_leq(d.grade(), n->target)) {
    n->error = Error(ErrorCode::kInvalidRegrade,
                     "cannot regrade " + d.str() + " from " + d.grade().str() + " down to " + n->target.str());
  } else {
    n->typing = Typing{d.dom(), d.cod(), n->target};
  }
  return Diagram(std::move(n));
}

Diagram Diagram::wait(const std::string& x) { return regrade(id({x}), 1); }

Diagram::Kind Diagram::kind() const { return node_->kind; }
const Generator& Diagram::generator() const { return node_->gen; }
const Objects& Diagram::objects() const { return node_->objects; }
const Diagram& Diagram::left() const { return *node_->a; }
const Diagram& Diagram::right() const { return *node_->b; }
const Grade& Diagram::target() const { return node_->target; }

bool Diagram::well_typed() const { return node_->typing.has_value(); }

const Typing& Diagram::typing() const {
  if (node_->error) throw *node_->error;
  return *node_->typing;
}

std::string Diagram::str() const {
  switch (kind()) {
    case Kind::kGen:
      return node_->gen.name;
    case Kind::kId: {
      std::string out = "id";
      for (const auto& o : objects()) out += " " + o;
      return out;
    }
    case Kind::kSym:
      return "swap " + objects()[0] + " " + objects()[1];
    case Kind::kUnitI:
      return "unit";
    case Kind::kSeq: {
      const std::string r = right().kind() == Kind::kSeq ? "(" + right().str() + ")" : right().str();
      return left().str() + " ; " + r;
    }
    case Kind::kPar: {
      auto wrap = [](const Diagram& d, bool par_too) {
        const bool paren = d.kind() == Kind::kSeq || (par_too && d.kind() == Kind::kPar);
        return paren ? "(" + d.str() + ")" : d.str();
      };
      return wrap(left(), false) + " * " + wrap(right(), true);
    }
    case Kind::kRegrade:
      if (left().kind() == Kind::kId && left().objects().size() == 1 && target() == Grade(1))
        return "wait " + left().objects()[0];
      return "up(" + left().str() + ", " + target().str() + ")";
  }
  return {};
}

bool Diagram::operator==(const Diagram& o) const {
  if (node_ == o.node_) return true;
  if (kind() != o.kind()) return false;
  switch (kind()) {
    case Kind::kGen:
      return generator() == o.generator();
    case Kind::kId:
    case Kind::kSym:
      return objects() == o.objects();
    case Kind::kUnitI:
      return true;
    case Kind::kSeq:
    case Kind::kPar:
      return left() == o.left() && right() == o.right();
    case Kind::kRegrade:
      return target() == o.target() && left() == o.left();
  }
  return false;
}

Typing typecheck(const Diagram& d) { return d.typing(); }

// ---------------------------------------------------------------------------
// Layout

namespace {

std::vector<Interval> lanes_to_ports(const std::vector<std::int64_t>& lanes) {
  std::vector<Interval> out;
  for (auto l : lanes) out.push_back({Rational(l), Rational(l + 1)});
  return out;
}

std::vector<std::int64_t> iota_lanes(std::size_t n, std::int64_t from = 0) {
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(from + static_cast<std::int64_t>(i));
  return out;
}

struct Block {
  std::int64_t w = 0, h = 0;
  std::vector<Tile> tiles;
  std::vector<std::int64_t> west, east;  // lane of each domain / codomain wire
  Objects cod;
};

class Layouter {
 public:
  Block lay(const Diagram& d) {
    switch (d.kind()) {
      case Diagram::Kind::kGen:
        return generator(d.generator());
      case Diagram::Kind::kId: {
        Block b;
        b.h = static_cast<std::int64_t>(d.objects().size());
        b.west = b.east = iota_lanes(d.objects().size());
        b.cod = d.objects();
        return b;
      }
      case Diagram::Kind::kSym: {
        Block b;
        b.h = 2;
        b.west = b.east = {0, 1};
        Tile t = make_cell_tile(fresh("swap " + d.objects()[0] + " " + d.objects()[1]),
                                braid_cell_name(d.objects()[0], d.objects()[1]), Rect{0, 0, 0, 2});
        t.west_ports = t.east_ports = lanes_to_ports(b.west);
        b.tiles.push_back(std::move(t));
        b.cod = d.cod();
        return b;
      }
      case Diagram::Kind::kUnitI:
        return Block{};
      case Diagram::Kind::kSeq:
        return seq(lay(d.left()), lay(d.right()));
      case Diagram::Kind::kPar:
        return par(lay(d.left()), lay(d.right()));
      case Diagram::Kind::kRegrade: {
        Block b = lay(d.left());
        pad(b, d.target().to_int() - b.w);
        return b;
      }
    }
    throw Error(ErrorCode::kInvalidArgument, "bad diagram kind");
  }

 private:
  std::string fresh(const std::string& base) {
    const int n = ++used_[base];
    return n == 1 ? base : base + "#" + std::to_string(n);
  }

  Block generator(const Generator& g) {
    Block b;
    const std::int64_t t = g.time.to_int();
    if (t == 0 && g.inputs.empty())
      throw Error(ErrorCode::kInvalidArgument,
                  "zero-duration generator " + g.name + " has no inputs and cannot be placed on a cut");
    b.w = t;
    b.h = static_cast<std::int64_t>(std::max<std::size_t>({g.inputs.size(), g.outputs.size(), 1}));
    b.west = iota_lanes(g.inputs.size());
    b.east = iota_lanes(g.outputs.size());
    Tile tile = make_cell_tile(fresh(g.name), g.name, Rect{0, t, 0, b.h});
    tile.west_ports = lanes_to_ports(b.west);
    tile.east_ports = lanes_to_ports(b.east);
    b.tiles.push_back(std::move(tile));
    b.cod = g.outputs;
    return b;
  }

  void pad(Block& b, std::int64_t extra) {
    if (extra <= 0) return;
    std::set<std::int64_t> wired(b.east.begin(), b.east.end());
    for (std::int64_t c = b.w; c < b.w + extra; ++c)
      for (std::size_t j = 0; j < b.east.size(); ++j) {
        const std::int64_t l = b.east[j];
        Tile t = make_cell_tile(fresh("wait " + b.cod[j]), wait_cell_name(b.cod[j]), Rect{c, c + 1, l, l + 1});
        t.west_ports = t.east_ports = lanes_to_ports({l});
        b.tiles.push_back(std::move(t));
      }
    for (std::int64_t r = 0; r < b.h;) {
      if (wired.count(r)) {
        ++r;
        continue;
      }
      std::int64_t e = r;
      while (e < b.h && !wired.count(e)) ++e;
      b.tiles.push_back(gap(Rect{b.w, b.w + extra, r, e}));
      r = e;
    }
    b.w += extra;
  }

  Tile gap(Rect r) {
    Tile t;
    t.name = fresh("gap");
    t.kind = TileKind::kGap;
    t.rect = r;
    return t;
  }

  void pad_height(Block& b, std::int64_t h) {
    if (b.w > 0 && b.h < h) b.tiles.push_back(gap(Rect{0, b.w, b.h, h}));
    b.h = std::max(b.h, h);
  }

  static void shift(Block& b, std::int64_t dx, std::int64_t dy) {
    for (auto& t : b.tiles) {
      t.rect.x0 += dx, t.rect.x1 += dx, t.rect.y0 += dy, t.rect.y1 += dy;
      for (auto* ports : {&t.west_ports, &t.east_ports})
        if (*ports)
          for (auto& iv : **ports) {
            iv.lo = Rational(iv.lo.num + dy * iv.lo.den, iv.lo.den);
            iv.hi = Rational(iv.hi.num + dy * iv.hi.den, iv.hi.den);
          }
    }
    for (auto* lanes : {&b.west, &b.east})
      for (auto& l : *lanes) l += dy;
  }

  Block seq(Block a, Block b) {
    const std::int64_t h = std::max(a.h, b.h);
    pad_height(a, h);
    pad_height(b, h);
    shift(b, a.w, 0);
    Block out;
    out.w = a.w + b.w;
    out.h = h;
    out.west = a.west;
    out.east = b.east;
    out.cod = b.cod;
    out.tiles = std::move(a.tiles);
    if (a.east != b.west) {
      Tile r;
      r.name = fresh("relane");
      r.kind = TileKind::kRelane;
      r.passthrough = vpath(a.cod);
      r.rect = Rect{a.w, a.w, 0, h};
      r.west_ports = lanes_to_ports(a.east);
      r.east_ports = lanes_to_ports(b.west);
      out.tiles.push_back(std::move(r));
    }
    out.tiles.insert(out.tiles.end(), b.tiles.begin(), b.tiles.end());
    return out;
  }

  Block par(Block a, Block b) {
    const std::int64_t w = std::max(a.w, b.w);
    pad(a, w - a.w);
    pad(b, w - b.w);
    shift(b, 0, a.h);
    Block out;
    out.w = w;
    out.h = a.h + b.h;
    out.west = a.west;
    out.west.insert(out.west.end(), b.west.begin(), b.west.end());
    out.east = a.east;
    out.east.insert(out.east.end(), b.east.begin(), b.east.end());
    out.cod = a.cod;
    out.cod.insert(out.cod.end(), b.cod.begin(), b.cod.end());
    out.tiles = std::move(a.tiles);
    out.tiles.insert(out.tiles.end(), b.tiles.begin(), b.tiles.end());
    return out;
  }

  std::map<std::string, int> used_;
};

PinwheelCell wait_column(const DoubleSignature& s, const Objects& objs) {
  if (objs.empty()) return identity_cell_v(time_path(1));
  PinwheelCell col = cell_from_generator(s, wait_cell_name(objs[0]));
  for (std::size_t i = 1; i < objs.size(); ++i) col = vcompose(col, cell_from_generator(s, wait_cell_name(objs[i])));
  return col;
}

PinwheelCell pad_cell(const DoubleSignature& s, PinwheelCell c, const Objects& cod, const Grade& extra) {
  const std::int64_t n = extra.to_int();
  if (n == 0) return c;
  const PinwheelCell col = wait_column(s, cod);
  for (std::int64_t i = 0; i < n; ++i) c = hcompose(c, col);
  return c;
}

}  // namespace

Tiling to_pinwheel(const Diagram& d) {
  typecheck(d);
  Layouter l;
  Block b = l.lay(d);
  if (b.w == 0 && !b.west.empty()) {
    // Without a column, wires no tile touches would vanish from the boundary.
    Tile anchor;
    anchor.name = "anchor";
    anchor.kind = TileKind::kRelane;
    anchor.passthrough = vpath(d.dom());
    anchor.rect = Rect{0, 0, 0, b.h};
    anchor.west_ports = anchor.east_ports = lanes_to_ports(b.west);
    b.tiles.insert(b.tiles.begin(), std::move(anchor));
  }
  return Tiling{b.w, b.h, std::move(b.tiles)};
}

PinwheelCell compile(const DoubleSignature& s, const Diagram& d) { return assemble_tiling(s, to_pinwheel(d)); }

PinwheelCell compile_compositional(const DoubleSignature& s, const Diagram& d) {
  switch (d.kind()) {
    case Diagram::Kind::kGen:
      return cell_from_generator(s, d.generator().name);
    case Diagram::Kind::kId:
      return identity_cell_h(vpath(d.objects()));
    case Diagram::Kind::kSym:
      return cell_from_generator(s, braid_cell_name(d.objects()[0], d.objects()[1]));
    case Diagram::Kind::kUnitI:
      return identity_cell_h(Path("*"));
    case Diagram::Kind::kSeq:
      return hcompose(compile_compositional(s, d.left()), compile_compositional(s, d.right()));
    case Diagram::Kind::kPar: {
      const Grade& g = d.grade();
      const Diagram& a = d.left();
      const Diagram& b = d.right();
      return vcompose(pad_cell(s, compile_compositional(s, a), a.cod(), monus(g, a.grade())),
                      pad_cell(s, compile_compositional(s, b), b.cod(), monus(g, b.grade())));
    }
    case Diagram::Kind::kRegrade:
      return pad_cell(s, compile_compositional(s, d.left()), d.cod(), monus(d.target(), d.left().grade()));
  }
  throw Error(ErrorCode::kInvalidArgument, "bad diagram kind");
}

bool eq_semantic(const DoubleSignature& s, const Diagram& a, const Diagram& b, const RuleSet& rules) {
  if (a.dom() != b.dom() || a.cod() != b.cod())
    throw Error(ErrorCode::kBoundaryMismatch, "diagrams have different boundaries: " + join(a.dom()) + " -> " +
                                                  join(a.cod()) + " and " + join(b.dom()) + " -> " + join(b.cod()));
  if (a.grade() != b.grade()) return false;
  return cells_equivalent(s, compile(s, a), compile(s, b), rules);
}

Diagram weak_interchange(const Diagram& d) {
  using K = Diagram::Kind;
  typecheck(d);
  if (d.kind() == K::kPar && d.left().kind() == K::kSeq && d.right().kind() == K::kSeq) {
    const Diagram& l = d.left();
    const Diagram& r = d.right();
    return Diagram::seq(Diagram::par(l.left(), r.left()), Diagram::par(l.right(), r.right()));
  }
  if (d.kind() == K::kSeq && d.left().kind() == K::kPar && d.right().kind() == K::kPar) {
    const Diagram& top = d.left();
    const Diagram& bottom = d.right();
    if (top.left().cod() == bottom.left().dom()) {
      const Diagram out = Diagram::par(Diagram::seq(top.left(), bottom.left()), Diagram::seq(top.right(), bottom.right()));
      return Diagram::regrade(out, d.grade());
    }
  }
  throw Error(ErrorCode::kShapeMismatch, "weak interchange needs a parallel pair of composites or a composite of "
                                         "parallel pairs with matching splits, got " + d.str());
}

// ---------------------------------------------------------------------------
// Sampling and the axiom suite

Objects DiagramSampler::random_objects(std::size_t max_len, std::mt19937_64& rng) const {
  const std::size_t len = 1 + rng() % std::max<std::size_t>(max_len, 1);
  Objects out;
  for (std::size_t i = 0; i < len; ++i) out.push_back(polygraph.objects[rng() % polygraph.objects.size()]);
  return out;
}

Diagram DiagramSampler::from(const Objects& dom, int depth, std::mt19937_64& rng) const {
  auto beside = [](const Objects& pre, const Diagram& mid, const Objects& post) {
    Diagram out = mid;
    if (!pre.empty()) out = Diagram::par(Diagram::id(pre), out);
    if (!post.empty()) out = Diagram::par(out, Diagram::id(post));
    return out;
  };
  // Generator placements: (generator, offset) with inputs matching dom there.
  std::vector<std::pair<const Generator*, std::size_t>> matches;
  for (const auto& g : polygraph.generators)
    for (std::size_t i = 0; i + g.inputs.size() <= dom.size(); ++i)
      if (std::equal(g.inputs.begin(), g.inputs.end(), dom.begin() + static_cast<std::ptrdiff_t>(i)))
        matches.emplace_back(&g, i);

  std::vector<int> options{0, 0};
  if (!matches.empty()) options.insert(options.end(), {1, 1, 1, 1});
  if (dom.size() >= 2) options.push_back(5);
  if (depth > 0) {
    options.insert(options.end(), {2, 2, 4});
    if (dom.size() >= 2) options.insert(options.end(), {3, 3});
  }
  switch (options[rng() % options.size()]) {
    case 1: {
      const auto [g, i] = matches[rng() % matches.size()];
      const Objects pre(dom.begin(), dom.begin() + static_cast<std::ptrdiff_t>(i));
      const Objects post(dom.begin() + static_cast<std::ptrdiff_t>(i + g->inputs.size()), dom.end());
      return beside(pre, Diagram::gen(*g), post);
    }
    case 2: {
      const Diagram first = from(dom, depth - 1, rng);
      return Diagram::seq(first, from(first.cod(), depth - 1, rng));
    }
    case 3: {
      const std::size_t k = 1 + rng() % (dom.size() - 1);
      return Diagram::par(from(Objects(dom.begin(), dom.begin() + static_cast<std::ptrdiff_t>(k)), depth - 1, rng),
                          from(Objects(dom.begin() + static_cast<std::ptrdiff_t>(k), dom.end()), depth - 1, rng));
    }
    case 4: {
      const Diagram inner = from(dom, depth - 1, rng);
      return Diagram::regrade(inner, seq_grade(inner.grade(), Grade(rng() % (max_extra_grade + 1))));
    }
    case 5: {
      const std::size_t i = rng() % (dom.size() - 1);
      const Objects pre(dom.begin(), dom.begin() + static_cast<std::ptrdiff_t>(i));
      const Objects post(dom.begin() + static_cast<std::ptrdiff_t>(i + 2), dom.end());
      return beside(pre, Diagram::sym(dom[i], dom[i + 1]), post);
    }
    default:
      if (dom.empty()) return Diagram::unit_i();
      if (dom.size() == 1 && rng() % 2) return Diagram::wait(dom[0]);
      return Diagram::id(dom);
  }
}

std::vector<AxiomResult> axioms_check(const TimedPolygraph& p, std::size_t samples, std::uint64_t seed) {
  const DoubleSignature s = draw(p);
  const RuleSet rules = default_rules();
  const DiagramSampler sampler{p};
  std::mt19937_64 rng(seed);
  constexpr int kDepth = 2;
  constexpr std::size_t kWidth = 3;

  std::vector<AxiomResult> results;
  for (int i = 1; i <= 10; ++i) {
    results.emplace_back();
    results.back().axiom = "(" + std::to_string(i) + ")";
  }

  auto check = [&](std::size_t axiom, const Diagram& lhs, const Diagram& rhs) {
    AxiomResult& r = results[axiom - 1];
    ++r.checked;
    bool ok = false;
    std::string why;
    try {
      ok = eq_semantic(s, lhs, rhs, rules);
      if (!ok) why = "grades " + lhs.grade().str() + " and " + rhs.grade().str() + " or bodies differ";
    } catch (const Error& e) {
      why = e.what();
    }
    if (ok) return;
    ++r.failed;
    if (!r.first_failure) r.first_failure = lhs.str() + "  vs  " + rhs.str() + ": " + why;
  };
  auto extra = [&] { return Grade(rng() % 3); };
  auto random = [&] { return sampler.from(sampler.random_objects(kWidth, rng), kDepth, rng); };
  using D = Diagram;

  for (std::size_t n = 0; n < samples; ++n) {
    {
      const D f = random();
      check(1, D::seq(f, D::id(f.cod())), f);
      check(1, D::seq(D::id(f.dom()), f), f);
    }
    {
      const D f = random();
      const D g = sampler.from(f.cod(), kDepth, rng);
      const D h = sampler.from(g.cod(), kDepth, rng);
      check(2, D::seq(D::seq(f, g), h), D::seq(f, D::seq(g, h)));
    }
    {
      const D f = random();
      check(3, D::par(f, D::id({})), f);
      check(3, D::par(D::id({}), f), f);
    }
    {
      const D f = random(), g = random(), h = random();
      check(4, D::par(D::par(f, g), h), D::par(f, D::par(g, h)));
    }
    {
      const D f = random();
      check(5, D::regrade(f, f.grade()), f);
    }
    {
      const D f = random();
      const Grade b = seq_grade(f.grade(), extra());
      const Grade c = seq_grade(b, extra());
      check(6, D::regrade(D::regrade(f, b), c), D::regrade(f, c));
    }
    {
      const D f = random();
      const D g = sampler.from(f.cod(), kDepth, rng);
      const Grade b = seq_grade(f.grade(), extra());
      const Grade d = seq_grade(g.grade(), extra());
      check(7, D::seq(D::regrade(f, b), D::regrade(g, d)), D::regrade(D::seq(f, g), seq_grade(b, d)));
    }
    {
      const D f = random(), g = random();
      const Grade b = seq_grade(f.grade(), extra());
      const Grade d = seq_grade(g.grade(), extra());
      check(8, D::par(D::regrade(f, b), D::regrade(g, d)), D::regrade(D::par(f, g), par_grade(b, d)));
    }
    {
      const D f = random();
      const D g = sampler.from(f.cod(), kDepth, rng);
      const D f2 = random();
      const D g2 = sampler.from(f2.cod(), kDepth, rng);
      const Grade target = seq_grade(par_grade(f.grade(), f2.grade()), par_grade(g.grade(), g2.grade()));
      check(9, D::regrade(D::par(D::seq(f, g), D::seq(f2, g2)), target), D::seq(D::par(f, f2), D::par(g, g2)));
    }
    {
      check(10, D::regrade(D::unit_i(), kZero), D::id({}));
      const D f = random();
      check(10, D::par(D::regrade(D::unit_i(), kZero), f), D::par(D::id({}), f));
    }
  }
  return results;
}

}  // namespace timecat
