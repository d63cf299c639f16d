#pragma once

// SVG pictures of the tiling: the boundary circle, the four generator
// geodesics and their translates with labels on the positive side, plus an
// optional ray with its crossed translates and neighbourhood arcs.

#include <cmath>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "schottky/coding.hpp"
#include "schottky/errors.hpp"
#include "schottky/group.hpp"
#include "schottky/hyperbolic.hpp"
#include "schottky/sequence.hpp"
#include "schottky/word.hpp"

namespace schottky {

inline constexpr std::size_t kMaxRenderDepth = 8;

struct SceneGeodesic {
  Geodesic<double> geodesic;
  /// "a" or "b": the generator geodesic this is a translate of.
  std::string label;
  /// Style classes, e.g. "translate-circle generator".
  std::string style;
  bool labelled = true;
};

struct SceneArc {
  Arc<double> arc;
  std::string style;
};

struct SceneRay {
  BoundaryPoint<double> end;
  std::string style;
};

struct RenderScene {
  std::size_t depth = 0;
  int pixels = 1000;
  double margin = 20;
  std::vector<SceneGeodesic> geodesics;
  std::vector<SceneArc> arcs;
  std::vector<SceneRay> rays;

  double disc_radius() const { return pixels / 2.0 - margin; }
};

/// 4 + sum_{l=1..L} 4 * 3^(l-1).
inline std::uint64_t translate_circle_count(std::size_t depth) {
  std::uint64_t count = 4;
  for (std::size_t l = 1; l <= depth; ++l) count += reduced_word_count(l);
  return count;
}

/// Generator geodesics, then w(lambda_x) for every nonempty reduced word w of
/// length <= depth in enumeration order, x being the last letter of w; the
/// label side is transported with w.
inline RenderScene build_scene(const Group& group, std::size_t depth) {
  if (depth > kMaxRenderDepth)
    throw InvalidArgument("render depth " + std::to_string(depth) + " exceeds " + std::to_string(kMaxRenderDepth) +
                          ": projected " + std::to_string(translate_circle_count(depth)) + " translate circles");
  RenderScene scene;
  scene.depth = depth;
  for (Symbol s : kSymbols)
    scene.geodesics.push_back(
        {group.labeled_geodesic(s), is_a_type(s) ? "a" : "b", "translate-circle generator", true});
  if (depth >= 1) {
    for_each_reduced_word(depth, [&](const GroupWord& w) {
      Symbol last = w[w.size() - 1];
      scene.geodesics.push_back({group.word_to_map(w).apply(group.labeled_geodesic(last)),
                                 is_a_type(last) ? "a" : "b", "translate-circle", true});
    });
  }
  return scene;
}

/// Adds the ray to the limit point of `s`, its first `crossings` crossed
/// translates and the nested neighbourhoods they cut off.
inline void add_sequence_overlay(RenderScene& scene, const Group& group, const SymbolicSequence& s,
                                 std::size_t crossings) {
  BoundaryPoint<double> p = decode(group, s, 1e-12).point;
  scene.rays.push_back({p, "ray"});
  for (std::size_t n = 1; n <= crossings; ++n) {
    Geodesic<double> lambda = crossed_translate(group, s, n);
    if (lambda.start().distance_to(lambda.end()) < 1e-3) break;
    scene.geodesics.push_back({lambda, is_a_type(s[n - 1]) ? "a" : "b", "crossed-translate", false});
    scene.arcs.push_back({cylinder_arc(group, s, n), "neighbourhood"});
  }
}

/// Point of a geodesic nearest the origin.
inline Complex<double> geodesic_apex(const Geodesic<double>& g) {
  double delta = g.half_span();
  Complex<double> centre = unit(g.normal_angle()) / std::cos(delta);
  double r = std::abs(std::tan(delta));
  return centre - r * centre / std::abs(centre);
}

/// Where the label of a geodesic goes: just off its apex, on the positive
/// side.
inline Complex<double> label_anchor(const Geodesic<double>& g) {
  Complex<double> apex = geodesic_apex(g);
  Complex<double> normal = g.positive_normal(apex);
  normal /= std::abs(normal);
  double r = std::abs(std::tan(g.half_span()));
  return apex + std::min(0.04, 0.3 * r) * normal;
}

namespace detail {

class SvgWriter {
 public:
  explicit SvgWriter(const RenderScene& scene) : scene_(scene), radius_(scene.disc_radius()) {
    out_ << std::fixed << std::setprecision(3);
  }

  std::string write() {
    double size = scene_.pixels;
    double centre = size / 2;
    out_ << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out_ << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << size << "\" height=\"" << size
         << "\" viewBox=\"0 0 " << size << " " << size << "\">\n";
    out_ << "<style>.boundary{fill:none;stroke:#000;stroke-width:1.5}"
            ".translate-circle{fill:none;stroke:#246;stroke-width:0.8}"
            ".generator{stroke:#a22;stroke-width:1.5}"
            ".crossed-translate{fill:none;stroke:#d80;stroke-width:1.2}"
            ".neighbourhood{fill:none;stroke:#0a4;stroke-width:4;stroke-opacity:0.5}"
            ".ray{stroke:#000;stroke-width:1;stroke-dasharray:4 3}"
            ".label{font-family:sans-serif;text-anchor:middle;dominant-baseline:middle}</style>\n";
    out_ << "<circle class=\"boundary\" cx=\"" << centre << "\" cy=\"" << centre << "\" r=\"" << radius_ << "\"/>\n";
    for (const auto& g : scene_.geodesics) geodesic(g);
    for (const auto& a : scene_.arcs) boundary_arc(a);
    for (const auto& r : scene_.rays) ray(r);
    out_ << "</svg>\n";
    return out_.str();
  }

 private:
  double sx(const Complex<double>& z) const { return scene_.pixels / 2.0 + radius_ * z.real(); }
  double sy(const Complex<double>& z) const { return scene_.pixels / 2.0 - radius_ * z.imag(); }

  void geodesic(const SceneGeodesic& g) {
    Complex<double> p1 = g.geodesic.start().to_complex();
    Complex<double> p2 = g.geodesic.end().to_complex();
    double r = std::abs(std::tan(g.geodesic.half_span()));
    // The drawn arc must pass through the apex, not bulge outside the disc.
    Complex<double> mid = geodesic_apex(g.geodesic);
    double cross = (sx(p2) - sx(p1)) * (sy(mid) - sy(p1)) - (sy(p2) - sy(p1)) * (sx(mid) - sx(p1));
    int sweep = cross < 0 ? 1 : 0;
    out_ << "<path class=\"" << g.style << "\" d=\"M " << sx(p1) << " " << sy(p1) << " A " << r * radius_ << " "
         << r * radius_ << " 0 0 " << sweep << " " << sx(p2) << " " << sy(p2) << "\"/>\n";
    if (!g.labelled) return;
    Complex<double> anchor = label_anchor(g.geodesic);
    double font = std::max(2.0, std::min(18.0, 60.0 * r));
    out_ << "<text class=\"label\" x=\"" << sx(anchor) << "\" y=\"" << sy(anchor) << "\" font-size=\"" << font
         << "\">" << g.label << "</text>\n";
  }

  void boundary_arc(const SceneArc& a) {
    Complex<double> p1 = a.arc.start().to_complex();
    Complex<double> p2 = a.arc.end().to_complex();
    // Counterclockwise in the disc is a negative sweep once y is flipped.
    int large = a.arc.length() > pi<double>() ? 1 : 0;
    out_ << "<path class=\"" << a.style << "\" d=\"M " << sx(p1) << " " << sy(p1) << " A " << radius_ << " "
         << radius_ << " 0 " << large << " 0 " << sx(p2) << " " << sy(p2) << "\"/>\n";
  }

  void ray(const SceneRay& r) {
    Complex<double> end = r.end.to_complex();
    out_ << "<line class=\"" << r.style << "\" x1=\"" << sx(Complex<double>(0)) << "\" y1=\""
         << sy(Complex<double>(0)) << "\" x2=\"" << sx(end) << "\" y2=\"" << sy(end) << "\"/>\n";
  }

  const RenderScene& scene_;
  double radius_;
  std::ostringstream out_;
};

}  // namespace detail

inline std::string render_scene(const RenderScene& scene) { return detail::SvgWriter(scene).write(); }

}  // namespace schottky
