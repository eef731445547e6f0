#include "timecat/tilted.hpp"

#include <deque>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "fixtures.hpp"

namespace timecat {
namespace {

TwoCell cell(const std::string& name, const std::vector<std::string>& dom, const std::vector<std::string>& cod) {
  return TwoCell{name, vpath(dom), vpath(cod)};
}

// Small alphabet so that random terms often coincide after shuffling.
std::vector<TwoCell> pool(bool with_sink) {
  std::vector<TwoCell> cells = {
      cell("m", {"a", "b"}, {"a"}), cell("n", {"a"}, {"a", "b"}), cell("x", {"a"}, {"b"}),
      cell("y", {"b"}, {"a"}),      cell("e", {}, {"b"}),
  };
  if (with_sink) cells.push_back(cell("d", {"b"}, {}));
  return cells;
}

SliceTerm random_term(std::mt19937_64& rng, std::size_t len, bool with_sink = false) {
  std::uniform_int_distribution<int> coin(0, 1);
  std::vector<std::string> start;
  for (int i = 0; i < 3; ++i) start.push_back(coin(rng) ? "a" : "b");
  Path frontier = vpath(start);
  std::vector<std::pair<TwoCell, std::size_t>> layers;
  for (std::size_t n = 0; n < len; ++n) {
    std::vector<std::pair<TwoCell, std::size_t>> options;
    for (const auto& c : pool(with_sink))
      for (std::size_t off = 0; off + c.dom.size() <= frontier.size(); ++off)
        if (frontier.slice(off, c.dom.size()) == c.dom && frontier.size() - c.dom.size() + c.cod.size() <= 5)
          options.emplace_back(c, off);
    if (options.empty()) break;
    auto pick = options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)];
    layers.push_back(pick);
    frontier = build_term(vpath(start), layers).cod();
  }
  return build_term(vpath(start), layers);
}

// Every term reachable by interchanging adjacent independent slices.
std::set<std::vector<Slice>> interchange_class(const SliceTerm& t) {
  std::set<std::vector<Slice>> seen{t.slices()};
  std::deque<SliceTerm> todo{t};
  while (!todo.empty()) {
    SliceTerm cur = todo.front();
    todo.pop_front();
    for (std::size_t i = 0; i + 1 < cur.size(); ++i)
      if (auto next = move_slice(cur, i + 1, i); next && seen.insert(next->slices()).second) todo.push_back(*next);
  }
  return seen;
}

std::string dump(const SliceTerm& t) {
  std::string out = t.dom().str() + " |";
  for (const auto& s : t.slices()) out += " " + s.gen.name + "@" + std::to_string(s.offset());
  return out;
}

TEST(Tilt, CellBoundaryBecomesTwoCell) {
  const auto s = draw(testing::pinwheel_polygraph());
  const auto tc = tilt_cell(*s.find_cell("f"));
  EXPECT_EQ(tc.dom, vpath({"A"}) + time_path(2));
  EXPECT_EQ(tc.cod, time_path(2) + vpath({"E"}));
  const auto g = tilt(s);
  EXPECT_TRUE(g.validate().empty());
  EXPECT_EQ(g.two_cells.size(), s.cells().size());
  EXPECT_EQ(g.edges.size(), s.h_edges.size() + s.v_edges.size());
}

TEST(SliceTerm, RejectsBrokenChain) {
  const auto m = cell("m", {"a", "b"}, {"a"});
  EXPECT_THROW(build_term(vpath({"b", "b"}), {{m, 0}}), Error);
  EXPECT_THROW(SliceTerm(vpath({"a", "b"}), vpath({"b"}), {Slice{Path("*"), m, Path("*")}}), Error);
}

TEST(SliceTerm, InterchangeOfDisjointSlices) {
  const auto x = cell("x", {"a"}, {"b"});
  const auto y = cell("y", {"b"}, {"a"});
  const Path dom = vpath({"a", "b"});
  const auto t1 = build_term(dom, {{x, 0}, {y, 1}});
  const auto t2 = build_term(dom, {{y, 1}, {x, 0}});
  EXPECT_TRUE(terms_equal(t1, t2));
  const auto chained = build_term(vpath({"a"}), {{x, 0}, {y, 0}});
  EXPECT_FALSE(move_slice(chained, 1, 0).has_value());
}

TEST(SliceTerm, NormalizeDecidesInterchangeClasses) {
  std::mt19937_64 rng(11);
  std::size_t compared = 0, equal = 0;
  std::vector<SliceTerm> terms;
  for (int i = 0; i < 400; ++i) terms.push_back(random_term(rng, 1 + i % 5));
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto cls = interchange_class(terms[i]);
    for (std::size_t j = i; j < std::min(terms.size(), i + 40); ++j) {
      if (!(terms[i].dom() == terms[j].dom()) || !(terms[i].cod() == terms[j].cod()) ||
          terms[i].size() != terms[j].size())
        continue;
      ++compared;
      const bool oracle = cls.count(terms[j].slices()) > 0;
      equal += oracle;
      EXPECT_EQ(terms_equal(terms[i], terms[j]), oracle) << i << " vs " << j;
    }
  }
  EXPECT_GT(compared, 100u);
  EXPECT_GT(equal, 20u);
}

TEST(SliceTerm, NormalFormIsIdempotentAndShuffleInvariant) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const auto t = random_term(rng, 6);
    const auto nf = normalize(t);
    EXPECT_EQ(normalize(nf), nf) << dump(t);
    SliceTerm walked = t;
    for (int step = 0; step < 20 && walked.size() > 1; ++step) {
      std::size_t k = std::uniform_int_distribution<std::size_t>(0, walked.size() - 2)(rng);
      if (auto next = move_slice(walked, k + 1, k)) walked = *next;
    }
    EXPECT_EQ(normalize(walked), nf) << dump(t) << "\n" << dump(walked) << "\n" << dump(nf) << "\n" << dump(normalize(walked));
  }
}

TEST(SliceTerm, SourceFloatsAroundSink) {
  const auto e = cell("e", {}, {"b"});
  const auto d = cell("d", {"b"}, {});
  const Path dom = vpath({"a", "b", "a"});
  const auto sink_first = build_term(dom, {{d, 1}, {e, 1}});
  const auto source_left = build_term(dom, {{e, 1}, {d, 2}});
  const auto source_right = build_term(dom, {{e, 2}, {d, 1}});
  const auto scalar = build_term(dom, {{e, 1}, {d, 1}});
  EXPECT_TRUE(terms_equal(sink_first, source_left));
  EXPECT_TRUE(terms_equal(sink_first, source_right));
  EXPECT_TRUE(terms_equal(source_left, source_right));
  EXPECT_FALSE(terms_equal(scalar, source_left));
}

TEST(SliceTerm, InterchangeWalksStayEqualWithSinks) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 200; ++i) {
    const auto t = random_term(rng, 5, true);
    SliceTerm walked = t;
    for (int step = 0; step < 15 && walked.size() > 1; ++step) {
      std::size_t k = std::uniform_int_distribution<std::size_t>(0, walked.size() - 2)(rng);
      if (auto next = move_slice(walked, k + 1, k)) walked = *next;
    }
    EXPECT_TRUE(terms_equal(t, walked)) << dump(t) << " / " << dump(walked);
  }
}

TEST(SliceTerm, NormalFormIsIdempotentWithSinks) {
  const Path dom = vpath({"b", "b", "a"});
  const auto t = build_term(dom, {{cell("y", {"b"}, {"a"}), 1}, {cell("x", {"a"}, {"b"}), 2},
                                  {cell("e", {}, {"b"}), 1}, {cell("d", {"b"}, {}), 0}});
  EXPECT_EQ(normalize(normalize(t)), normalize(t));

  std::mt19937_64 rng(13);
  for (int i = 0; i < 500; ++i) {
    const auto u = random_term(rng, 6, true);
    const auto nf = normalize(u);
    EXPECT_EQ(normalize(nf), nf) << dump(u);
    EXPECT_TRUE(terms_equal(u, nf)) << dump(u);
  }
}

TEST(SliceTerm, WhiskerAndCompose) {
  const auto x = cell("x", {"a"}, {"b"});
  const auto t = single_slice_term(x);
  const auto w = whisker(t, vpath({"b"}), vpath({"a"}));
  EXPECT_EQ(w.dom(), vpath({"b", "a", "a"}));
  EXPECT_EQ(w.cod(), vpath({"b", "b", "a"}));
  EXPECT_EQ(w.slices()[0].offset(), 1u);
  EXPECT_EQ(compose_terms(identity_term(t.dom()), t), t);
  EXPECT_THROW(compose_terms(t, t), Error);
}

TEST(SliceTerm, DataflowTracksProducers) {
  const auto n = cell("n", {"a"}, {"a", "b"});
  const auto m = cell("m", {"a", "b"}, {"a"});
  const auto t = build_term(vpath({"a"}), {{n, 0}, {m, 0}});
  const auto df = dataflow(t);
  EXPECT_EQ(df.inputs[0][0].producer, -1);
  EXPECT_EQ(df.inputs[1][0].producer, 0);
  EXPECT_EQ(df.inputs[1][1].producer_pos, 1u);
  EXPECT_EQ(df.consumers[0], (std::vector<int>{1, 1}));
  EXPECT_EQ(df.consumers[1], (std::vector<int>{-1}));
}

TEST(SliceTerm, InterpretCountsLayers) {
  const auto x = cell("x", {"a"}, {"b"});
  const auto y = cell("y", {"b"}, {"a"});
  const auto t = build_term(vpath({"a", "a"}), {{x, 0}, {x, 1}, {y, 0}});
  Interpretation<int> count{[](const Path&) { return 0; }, [](int a, int b) { return a + b; },
                            [](int v, const Path&, const Path&) { return v; }};
  EXPECT_EQ(interpret<int>(t, {{"x", 10}, {"y", 1}}, count), 21);
  EXPECT_THROW(interpret<int>(t, {{"x", 10}}, count), Error);
}

}  // namespace
}  // namespace timecat
