#include "timecat/tilted.hpp"

#include <algorithm>
#include <tuple>

namespace timecat {

const TwoCell* TwoGraph::find(const std::string& name) const {
  auto it = two_cells.find(name);
  return it == two_cells.end() ? nullptr : &it->second;
}

std::vector<std::string> TwoGraph::validate() const {
  std::vector<std::string> errors;
  for (const auto& e : edges)
    if (!objects.count(e.src) || !objects.count(e.tgt)) errors.push_back("edge " + e.name + " has unknown endpoint");
  for (const auto& [name, c] : two_cells) {
    if (c.dom.source() != c.cod.source() || c.dom.target() != c.cod.target())
      errors.push_back("2-cell " + name + " has non-parallel boundary");
    for (const auto* p : {&c.dom, &c.cod})
      for (const auto& w : p->wires())
        if (!edges.count(w)) errors.push_back("2-cell " + name + " uses undeclared edge " + w.name);
  }
  return errors;
}

TwoCell tilt_cell(const CellGen& cell) {
  const auto& b = cell.boundary;
  return TwoCell{cell.name, b.u + b.h, b.k + b.v};
}

TwoGraph tilt(const DoubleSignature& s) {
  TwoGraph g;
  g.objects = s.objects;
  for (const auto& [n, e] : s.v_edges) g.edges.insert(Wire{EdgeKind::kVertical, n, e.src, e.tgt});
  for (const auto& [n, e] : s.h_edges) g.edges.insert(Wire{EdgeKind::kHorizontal, n, e.src, e.tgt});
  for (const auto& [n, c] : s.cells()) g.two_cells.emplace(n, tilt_cell(c));
  return g;
}

SliceTerm::SliceTerm(Path dom, Path cod, std::vector<Slice> slices)
    : dom_(std::move(dom)), cod_(std::move(cod)), slices_(std::move(slices)) {
  Path frontier = dom_;
  for (std::size_t i = 0; i < slices_.size(); ++i) {
    if (!(slices_[i].input() == frontier))
      throw Error(ErrorCode::kBoundaryMismatch, "slice " + std::to_string(i) + " (" + slices_[i].gen.name +
                                                    ") expects " + slices_[i].input().str() + " but frontier is " +
                                                    frontier.str());
    frontier = slices_[i].output();
  }
  if (!(frontier == cod_))
    throw Error(ErrorCode::kBoundaryMismatch, "final frontier " + frontier.str() + " differs from codomain " + cod_.str());
}

std::vector<std::string> SliceTerm::generator_names() const {
  std::vector<std::string> out;
  for (const auto& s : slices_) out.push_back(s.gen.name);
  return out;
}

namespace {

Slice place(const Path& frontier, const TwoCell& gen, std::size_t offset) {
  if (offset + gen.dom.size() > frontier.size() || !(frontier.slice(offset, gen.dom.size()) == gen.dom))
    throw Error(ErrorCode::kBoundaryMismatch, "generator " + gen.name + " with domain " + gen.dom.str() +
                                                  " does not match frontier " + frontier.str() + " at offset " +
                                                  std::to_string(offset));
  const std::size_t rest = offset + gen.dom.size();
  return Slice{frontier.slice(0, offset), gen, frontier.slice(rest, frontier.size() - rest)};
}

// Interchange of adjacent layers a;b acting on frontier `f0`: the ways of
// writing the same composite as b';a'. Empty when they share a wire. Two
// results only when a has no outputs, b no inputs, and both sit at one spot.
std::vector<std::pair<Slice, Slice>> swap_alternatives(const Path& f0, const Slice& a, const Slice& b) {
  const std::size_t pa = a.offset();
  const std::size_t pb = b.offset();
  const std::size_t a_dom = a.gen.dom.size(), a_cod = a.gen.cod.size();
  const std::size_t b_dom = b.gen.dom.size(), b_cod = b.gen.cod.size();
  std::vector<std::pair<Slice, Slice>> out;
  if (pb + b_dom <= pa) {
    // b acts strictly left of a's output.
    Slice nb = place(f0, b.gen, pb);
    Slice na = place(nb.output(), a.gen, pa + b_cod - b_dom);
    out.emplace_back(std::move(nb), std::move(na));
  }
  if (pa + a_cod <= pb) {
    Slice nb = place(f0, b.gen, pb + a_dom - a_cod);
    Slice na = place(nb.output(), a.gen, pa);
    out.emplace_back(std::move(nb), std::move(na));
  }
  return out;
}

std::optional<std::pair<Slice, Slice>> swap_adjacent(const Path& f0, const Slice& a, const Slice& b) {
  auto alts = swap_alternatives(f0, a, b);
  if (alts.empty()) return std::nullopt;
  return std::move(alts.front());
}

bool has_empty_side(const SliceTerm& t) {
  for (const auto& s : t.slices())
    if (s.gen.dom.empty() || s.gen.cod.empty()) return true;
  return false;
}

// Breadth-first search of the interchange class of `from` for `to`.
bool search_class(const SliceTerm& from, const SliceTerm& to) {
  constexpr std::size_t kLimit = 200000;
  std::set<std::vector<Slice>> seen{from.slices()};
  std::vector<std::vector<Slice>> todo{from.slices()};
  while (!todo.empty()) {
    std::vector<Slice> cur = std::move(todo.back());
    todo.pop_back();
    if (cur == to.slices()) return true;
    for (std::size_t i = 0; i + 1 < cur.size(); ++i)
      for (auto& [nb, na] : swap_alternatives(cur[i].input(), cur[i], cur[i + 1])) {
        std::vector<Slice> next = cur;
        next[i] = std::move(nb);
        next[i + 1] = std::move(na);
        if (seen.insert(next).second) todo.push_back(std::move(next));
      }
    if (seen.size() > kLimit)
      throw Error(ErrorCode::kInvalidArgument, "interchange class too large to search");
  }
  return false;
}

bool move_in_place(std::vector<Slice>& slices, std::size_t from, std::size_t to) {
  while (from > to) {
    auto swapped = swap_adjacent(slices[from - 1].input(), slices[from - 1], slices[from]);
    if (!swapped) return false;
    slices[from - 1] = std::move(swapped->first);
    slices[from] = std::move(swapped->second);
    --from;
  }
  while (from < to) {
    auto swapped = swap_adjacent(slices[from].input(), slices[from], slices[from + 1]);
    if (!swapped) return false;
    slices[from] = std::move(swapped->first);
    slices[from + 1] = std::move(swapped->second);
    ++from;
  }
  return true;
}

}  // namespace

SliceTerm build_term(const Path& dom, const std::vector<std::pair<TwoCell, std::size_t>>& layers) {
  Path frontier = dom;
  std::vector<Slice> slices;
  for (const auto& [gen, offset] : layers) {
    slices.push_back(place(frontier, gen, offset));
    frontier = slices.back().output();
  }
  return SliceTerm(dom, frontier, std::move(slices));
}

SliceTerm identity_term(const Path& p) { return SliceTerm(p, p, {}); }

SliceTerm single_slice_term(const TwoCell& gen) {
  return SliceTerm(gen.dom, gen.cod, {Slice{Path(gen.dom.source()), gen, Path(gen.dom.target())}});
}

SliceTerm compose_terms(const SliceTerm& t1, const SliceTerm& t2) {
  if (!(t1.cod() == t2.dom()))
    throw Error(ErrorCode::kBoundaryMismatch,
                "cannot compose: codomain " + t1.cod().str() + " differs from domain " + t2.dom().str());
  std::vector<Slice> slices = t1.slices();
  slices.insert(slices.end(), t2.slices().begin(), t2.slices().end());
  return SliceTerm(t1.dom(), t2.cod(), std::move(slices));
}

SliceTerm whisker(const SliceTerm& t, const Path& left, const Path& right) {
  if (left.target() != t.dom().source() || t.dom().target() != right.source())
    throw Error(ErrorCode::kBoundaryMismatch, "whisker endpoints do not chain with term boundary");
  std::vector<Slice> slices;
  slices.reserve(t.size());
  for (const auto& s : t.slices()) slices.push_back(Slice{left + s.left, s.gen, s.right + right});
  return SliceTerm(left + t.dom() + right, left + t.cod() + right, std::move(slices));
}

std::optional<SliceTerm> move_slice(const SliceTerm& t, std::size_t from, std::size_t to) {
  if (from >= t.size() || to >= t.size()) throw Error(ErrorCode::kInvalidArgument, "move_slice index out of range");
  std::vector<Slice> slices = t.slices();
  if (!move_in_place(slices, from, to)) return std::nullopt;
  return SliceTerm(t.dom(), t.cod(), std::move(slices));
}

namespace {

struct Layer {
  const TwoCell* gen;
  std::size_t off;
};

bool same_layer(const Layer& a, const Layer& b) { return a.off == b.off && (a.gen == b.gen || *a.gen == *b.gen); }

bool layer_less(const Layer& a, const Layer& b) {
  auto ka = std::tuple(a.off, a.off + a.gen->dom.size());
  auto kb = std::tuple(b.off, b.off + b.gen->dom.size());
  if (ka != kb) return ka < kb;
  return *a.gen < *b.gen;
}

bool layers_less(const std::vector<Layer>& a, const std::vector<Layer>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), layer_less);
}

// Offset layer j would have at index 0, following the same interchanges as
// move_in_place; nullopt when some layer in the way shares a wire with it.
std::optional<std::size_t> front_offset(const std::vector<Layer>& v, std::size_t j) {
  std::size_t pb = v[j].off;
  const std::size_t b_dom = v[j].gen->dom.size();
  for (std::size_t i = j; i-- > 0;) {
    const std::size_t pa = v[i].off, a_dom = v[i].gen->dom.size(), a_cod = v[i].gen->cod.size();
    if (pb + b_dom <= pa) continue;
    if (pa + a_cod <= pb) {
      pb = pb + a_dom - a_cod;
      continue;
    }
    return std::nullopt;
  }
  return pb;
}

void bring_to_front(std::vector<Layer>& v, std::size_t j) {
  Layer b = v[j];
  const std::size_t b_dom = b.gen->dom.size(), b_cod = b.gen->cod.size();
  for (std::size_t i = j; i-- > 0;) {
    Layer a = v[i];
    const std::size_t a_dom = a.gen->dom.size(), a_cod = a.gen->cod.size();
    if (b.off + b_dom <= a.off) {
      a.off = a.off + b_cod - b_dom;
    } else {
      b.off = b.off + a_dom - a_cod;
    }
    v[i + 1] = a;
  }
  v[0] = b;
}

// Selection sort over linear extensions: at every step take, among slices
// that can be interchanged to the front of what remains, the one acting
// leftmost in the current frontier. Equal fronts only arise from identical
// sources at one spot; those ties are broken by the normalized remainder.
std::vector<Layer> normal_layers(std::vector<Layer> rest) {
  std::vector<Layer> out;
  out.reserve(rest.size());
  while (!rest.empty()) {
    std::vector<std::size_t> best;
    std::optional<Layer> front;
    for (std::size_t j = 0; j < rest.size(); ++j) {
      auto off = front_offset(rest, j);
      if (!off) continue;
      const Layer cand{rest[j].gen, *off};
      if (!front || layer_less(cand, *front)) {
        front = cand;
        best = {j};
      } else if (same_layer(cand, *front)) {
        best.push_back(j);
      }
    }
    if (best.size() > 1) {
      std::optional<std::vector<Layer>> min_tail;
      for (auto j : best) {
        std::vector<Layer> cand = rest;
        bring_to_front(cand, j);
        auto tail = normal_layers({cand.begin() + 1, cand.end()});
        if (!min_tail || layers_less(tail, *min_tail)) min_tail = std::move(tail);
      }
      out.push_back(*front);
      out.insert(out.end(), min_tail->begin(), min_tail->end());
      return out;
    }
    bring_to_front(rest, best.front());
    out.push_back(rest.front());
    rest.erase(rest.begin());
  }
  return out;
}

}  // namespace

namespace {

SliceTerm greedy_pass(const SliceTerm& t) {
  std::vector<Layer> layers;
  layers.reserve(t.size());
  for (const auto& s : t.slices()) layers.push_back({&s.gen, s.offset()});
  std::vector<std::pair<TwoCell, std::size_t>> placed;
  placed.reserve(t.size());
  for (const auto& l : normal_layers(std::move(layers))) placed.emplace_back(*l.gen, l.off);
  return build_term(t.dom(), placed);
}

}  // namespace

SliceTerm normalize(const SliceTerm& t) {
  SliceTerm cur = greedy_pass(t);
  if (!has_empty_side(cur)) return cur;
  // Sources and sinks shift the offsets the greedy pass sees, so one pass
  // need not be a fixed point. Iterate; on a cycle take its least member.
  std::vector<SliceTerm> seen{cur};
  while (true) {
    SliceTerm next = greedy_pass(cur);
    if (next == cur) return cur;
    auto hit = std::find(seen.begin(), seen.end(), next);
    if (hit != seen.end()) {
      return *std::min_element(hit, seen.end(),
                               [](const SliceTerm& a, const SliceTerm& b) { return a.slices() < b.slices(); });
    }
    seen.push_back(next);
    cur = std::move(next);
  }
}

bool terms_equal(const SliceTerm& t1, const SliceTerm& t2) {
  if (!(t1.dom() == t2.dom()) || !(t1.cod() == t2.cod()) || t1.size() != t2.size()) return false;
  if (normalize(t1).slices() == normalize(t2).slices()) return true;
  // A source next to a sink can float to either side of it, which the normal
  // form does not see; such terms fall back to searching the whole class.
  if (has_empty_side(t1)) return search_class(t1, t2);
  return false;
}

Dataflow dataflow(const SliceTerm& t) {
  Dataflow df;
  std::vector<Dataflow::Port> frontier;
  for (std::size_t i = 0; i < t.dom().size(); ++i) frontier.push_back({-1, i});
  df.consumers.resize(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    const Slice& s = t.slices()[i];
    const std::size_t off = s.offset(), nd = s.gen.dom.size(), nc = s.gen.cod.size();
    std::vector<Dataflow::Port> in(frontier.begin() + off, frontier.begin() + off + nd);
    for (const auto& p : in)
      if (p.producer >= 0) df.consumers[p.producer][p.producer_pos] = static_cast<int>(i);
    df.inputs.push_back(std::move(in));
    df.consumers[i].assign(nc, -1);
    std::vector<Dataflow::Port> out;
    for (std::size_t j = 0; j < nc; ++j) out.push_back({static_cast<int>(i), j});
    frontier.erase(frontier.begin() + off, frontier.begin() + off + nd);
    frontier.insert(frontier.begin() + off, out.begin(), out.end());
  }
  return df;
}

}  // namespace timecat
