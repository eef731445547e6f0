#include "timecat/render.hpp"

#include <gtest/gtest.h>

#include <random>
#include <regex>

#include "fixtures.hpp"
#include "timecat/graded.hpp"

namespace timecat {
namespace {

using D = Diagram;

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++n;
  return n;
}

std::string render(const TimedPolygraph& p, const D& d, const RenderSpec& spec = {}) {
  return render_svg(draw(p), to_pinwheel(d), spec);
}

TEST(Render, SingleGenerator) {
  TimedPolygraph p;
  p.objects = {"X", "Y"};
  p.generators = {{"f", {"X"}, {"Y"}, 2}};
  const std::string svg = render(p, D::gen(p.generators[0]));
  EXPECT_EQ(svg.rfind("<?xml", 0), 0u);
  EXPECT_EQ(count(svg, "<rect"), 2u);  // background and the box
  EXPECT_NE(svg.find(">f</text>"), std::string::npos);
  EXPECT_NE(svg.find(">X</text>"), std::string::npos);
  EXPECT_NE(svg.find(">Y</text>"), std::string::npos);
  // Box spans two columns minus its insets.
  EXPECT_NE(svg.find("width=\"112\" height=\"32\" rx=\"4\""), std::string::npos) << svg;
  EXPECT_EQ(count(svg, "stroke=\"#1f4e79\""), 2u);  // one wire in, one out
}

TEST(Render, EmptyDiagramIsBlankCanvas) {
  const RenderSpec spec;
  const std::string svg = render(TimedPolygraph{}, D::unit_i(), spec);
  const std::string side = std::to_string(2 * static_cast<int>(spec.margin));
  EXPECT_NE(svg.find("width=\"" + side + "\" height=\"" + side + "\""), std::string::npos) << svg;
  EXPECT_EQ(count(svg, "<rect"), 1u);
  EXPECT_EQ(count(svg, "<line"), 0u);
  EXPECT_EQ(count(svg, "<text"), 0u);
}

TEST(Render, WaitsCarryTicks) {
  TimedPolygraph p;
  p.objects = {"X"};
  const std::string svg = render(p, D::regrade(D::id({"X"}), 3));
  EXPECT_EQ(count(svg, "<rect"), 1u);
  // Three wait segments each with a tick, plus the four dashed grid lines.
  EXPECT_EQ(count(svg, "<line"), 3u * 2 + 4);
}

TEST(Render, BraidsCross) {
  TimedPolygraph p;
  p.objects = {"X", "Y"};
  const std::string svg = render(p, D::sym("X", "Y"));
  // Two crossing strokes, both spanning the two lanes in opposite directions.
  const std::regex stroke(R"re(<line x1="([0-9.]+)" y1="([0-9.]+)" x2="([0-9.]+)" y2="([0-9.]+)" stroke="#1f4e79")re");
  std::vector<std::smatch> lines;
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), stroke); it != std::sregex_iterator(); ++it)
    if ((*it)[2] != (*it)[4]) lines.push_back(*it);
  ASSERT_EQ(lines.size(), 2u) << svg;
  EXPECT_EQ(lines[0][2], lines[1][4]);
  EXPECT_EQ(lines[0][4], lines[1][2]);
}

TEST(Render, DeterministicAndSpecDriven) {
  const TimedPolygraph p = testing::mascarpone_polygraph();
  const DiagramSampler sampler{p};
  std::mt19937_64 rng(5);
  for (int n = 0; n < 50; ++n) {
    const D d = sampler.from(sampler.random_objects(3, rng), 3, rng);
    const std::string a = render(p, d);
    EXPECT_EQ(a, render(p, d));
    RenderSpec wide;
    wide.column_width = 80;
    if (to_pinwheel(d).width > 0) EXPECT_NE(a, render(p, d, wide));
  }
}

TEST(Render, RejectsBadSpec) {
  RenderSpec spec;
  spec.lane_height = 0;
  try {
    render(TimedPolygraph{}, D::unit_i(), spec);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidArgument);
  }
}

TEST(Render, EscapesNames) {
  TimedPolygraph p;
  p.objects = {"X"};
  p.generators = {{"a<b", {"X"}, {"X"}, 1}};
  const std::string svg = render(p, D::gen(p.generators[0]));
  EXPECT_NE(svg.find("a&lt;b"), std::string::npos);
  EXPECT_EQ(svg.find("a<b"), std::string::npos);
}

}  // namespace
}  // namespace timecat
