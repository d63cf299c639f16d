#include <gtest/gtest.h>

#include <regex>

#include "support.hpp"

using namespace schottky;

namespace {

const Group& group() {
  static const Group g;
  return g;
}

struct SvgArc {
  std::string cls;
  double x1, y1, rx, ry;
  int large, sweep;
  double x2, y2;
};

std::vector<SvgArc> parse_arcs(const std::string& svg) {
  static const std::regex pattern(
      R"re(<path class="([^"]*)" d="M ([-0-9.]+) ([-0-9.]+) A ([-0-9.]+) ([-0-9.]+) 0 ([01]) ([01]) ([-0-9.]+) ([-0-9.]+)"/>)re");
  std::vector<SvgArc> arcs;
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), pattern); it != std::sregex_iterator(); ++it) {
    const auto& m = *it;
    arcs.push_back({m[1], std::stod(m[2]), std::stod(m[3]), std::stod(m[4]), std::stod(m[5]), std::stoi(m[6]),
                    std::stoi(m[7]), std::stod(m[8]), std::stod(m[9])});
  }
  return arcs;
}

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

// Centre of an SVG elliptical arc with equal radii and no rotation, following
// the endpoint-to-centre conversion of the SVG specification.
std::pair<double, double> arc_centre(const SvgArc& a) {
  double hx = (a.x1 - a.x2) / 2, hy = (a.y1 - a.y2) / 2;
  double r2 = a.rx * a.rx;
  double h2 = hx * hx + hy * hy;
  double k = h2 > 0 ? std::sqrt(std::max(0.0, (r2 - h2) / h2)) : 0;
  if (a.large == a.sweep) k = -k;
  return {k * hy + (a.x1 + a.x2) / 2, -k * hx + (a.y1 + a.y2) / 2};
}

// Minimal well-formedness: balanced, properly nested tags and quoted attributes.
bool well_formed(const std::string& xml) {
  std::vector<std::string> stack;
  std::size_t pos = 0;
  while ((pos = xml.find('<', pos)) != std::string::npos) {
    std::size_t end = xml.find('>', pos);
    if (end == std::string::npos) return false;
    std::string tag = xml.substr(pos + 1, end - pos - 1);
    pos = end + 1;
    if (tag.empty()) return false;
    if (count(tag, "\"") % 2 != 0) return false;
    if (tag[0] == '?') continue;
    if (tag[0] == '/') {
      if (stack.empty() || stack.back() != tag.substr(1)) return false;
      stack.pop_back();
      continue;
    }
    if (tag.back() == '/') continue;
    stack.push_back(tag.substr(0, tag.find(' ')));
  }
  return stack.empty();
}

}  // namespace

TEST(RenderScene, CountsTranslates) {
  EXPECT_EQ(translate_circle_count(0), 4u);
  EXPECT_EQ(translate_circle_count(3), 56u);
  EXPECT_EQ(build_scene(group(), 3).geodesics.size(), 56u);
  std::string svg = render_scene(build_scene(group(), 3));
  EXPECT_EQ(count(svg, "class=\"translate-circle"), 56u);
  EXPECT_EQ(count(svg, "class=\"translate-circle generator\""), 4u);
  EXPECT_EQ(count(svg, "<circle"), 1u);
  EXPECT_EQ(count(svg, "<text"), 56u);
}

TEST(RenderScene, EmptyScene) {
  std::string svg = render_scene(RenderScene{});
  EXPECT_TRUE(well_formed(svg));
  EXPECT_EQ(count(svg, "<circle"), 1u);
  EXPECT_EQ(count(svg, "<path"), 0u);
}

TEST(RenderScene, DepthGuard) {
  try {
    build_scene(group(), 9);
    FAIL();
  } catch (const InvalidArgument& e) {
    EXPECT_NE(std::string(e.what()).find(std::to_string(translate_circle_count(9))), std::string::npos);
  }
  EXPECT_NO_THROW(build_scene(group(), 8));
}

TEST(RenderScene, Deterministic) {
  EXPECT_EQ(render_scene(build_scene(group(), 4)), render_scene(build_scene(group(), 4)));
}

TEST(RenderScene, WellFormedAndInsideViewport) {
  RenderScene scene = build_scene(group(), 4);
  add_sequence_overlay(scene, group(), parse_sequence("thm43(k)"), 8);
  std::string svg = render_scene(scene);
  EXPECT_TRUE(well_formed(svg));
  static const std::regex coordinate(R"re((?:x|y|x1|y1|x2|y2|cx|cy)="([-0-9.]+)")re");
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), coordinate); it != std::sregex_iterator(); ++it) {
    double v = std::stod((*it)[1]);
    EXPECT_GE(v, 0);
    EXPECT_LE(v, scene.pixels);
  }
  for (const auto& a : parse_arcs(svg)) {
    for (double v : {a.x1, a.y1, a.x2, a.y2}) {
      EXPECT_GE(v, 0);
      EXPECT_LE(v, scene.pixels);
    }
  }
}

TEST(RenderScene, ArcsOrthogonalToBoundary) {
  RenderScene scene = build_scene(group(), 3);
  std::string svg = render_scene(scene);
  auto arcs = parse_arcs(svg);
  ASSERT_EQ(arcs.size(), 56u);
  const double o = scene.pixels / 2.0, big_r = scene.disc_radius();
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    const auto& a = arcs[i];
    EXPECT_EQ(a.large, 0);
    EXPECT_NEAR(std::hypot(a.x1 - o, a.y1 - o), big_r, 0.5);
    EXPECT_NEAR(std::hypot(a.x2 - o, a.y2 - o), big_r, 0.5);
    const auto& g = scene.geodesics[i].geodesic;
    EXPECT_NEAR(a.rx, big_r * std::abs(std::tan(g.half_span())), 0.5) << i;
    // small arcs are near-semicircles over their chord; the centre is ill-conditioned
    if (a.rx < 20) continue;
    auto [cx, cy] = arc_centre(a);
    double distance = std::hypot(cx - o, cy - o);
    // orthogonal circles: |C - O|^2 = R^2 + r^2
    EXPECT_NEAR(std::sqrt(std::max(0.0, distance * distance - big_r * big_r)), a.rx, 0.5) << i;
    Complex<double> centre = unit(g.normal_angle()) / std::cos(g.half_span());
    EXPECT_NEAR(cx, o + big_r * centre.real(), 0.5) << i;
    EXPECT_NEAR(cy, o - big_r * centre.imag(), 0.5) << i;
  }
}

TEST(RenderScene, LabelsOnPositiveSide) {
  RenderScene scene = build_scene(group(), 4);
  for (const auto& g : scene.geodesics) {
    ASSERT_TRUE(g.labelled);
    EXPECT_TRUE(g.geodesic.on_positive_side(label_anchor(g.geodesic)));
    EXPECT_LT(std::abs(label_anchor(g.geodesic)), 1.0);
  }
  // the generator labels: a's label sits inside circle A
  EXPECT_TRUE(group().circle(Symbol::a).contains(label_anchor(scene.geodesics[0].geodesic)));
  EXPECT_FALSE(group().circle(Symbol::A).contains(label_anchor(scene.geodesics[1].geodesic)));
}

TEST(RenderScene, OverlayEndpointsMatch) {
  auto s = parse_sequence("thm43(k)");
  RenderScene scene = build_scene(group(), 0);
  add_sequence_overlay(scene, group(), s, 6);
  std::string svg = render_scene(scene);
  EXPECT_EQ(count(svg, "class=\"ray\""), 1u);
  std::vector<SvgArc> crossed;
  for (const auto& a : parse_arcs(svg))
    if (a.cls == "crossed-translate") crossed.push_back(a);
  ASSERT_GE(crossed.size(), 3u);
  const double o = scene.pixels / 2.0, big_r = scene.disc_radius();
  for (std::size_t n = 0; n < crossed.size(); ++n) {
    Geodesic<double> lambda = crossed_translate(group(), s, n + 1);
    Complex<double> p1 = lambda.start().to_complex(), p2 = lambda.end().to_complex();
    EXPECT_NEAR(crossed[n].x1, o + big_r * p1.real(), 0.5);
    EXPECT_NEAR(crossed[n].y1, o - big_r * p1.imag(), 0.5);
    EXPECT_NEAR(crossed[n].x2, o + big_r * p2.real(), 0.5);
    EXPECT_NEAR(crossed[n].y2, o - big_r * p2.imag(), 0.5);
  }
}
