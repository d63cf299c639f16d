#pragma once

// The two-generator Schottky group: four congruent circles orthogonal to S^1
// centred at c, -c, ic, -ic (radius r, c = sqrt(1 + r^2)). g_a preserves the
// real axis and carries the circle at -c onto the one at +c; g_b is its
// rotation by a quarter turn.

#include <array>
#include <cmath>
#include <optional>
#include <sstream>
#include <string>

#include "schottky/hyperbolic.hpp"
#include "schottky/word.hpp"

namespace schottky {

inline constexpr double kDefaultRadius = 0.8;

template <class Real>
class SchottkyGroup {
 public:
  using C = Complex<Real>;

  explicit SchottkyGroup(Real radius = Real(kDefaultRadius))
      : radius_(radius),
        center_(checked_center(radius)),
        circles_(make_circles(center_, radius)),
        generators_(make_generators(center_)) {
    for (Symbol s : kSymbols) inverse_generators_[index(s)] = generators_[index(schottky::inverse(s))];
  }

  Real radius() const { return radius_; }
  /// Distance of each circle centre from the origin.
  Real center_distance() const { return center_; }

  /// Circle whose interior the generator `s` maps the exterior of
  /// circle(inverse(s)) into.
  const GeneratorCircle<Real>& circle(Symbol s) const { return circles_[index(s)]; }
  const MoebiusMap<Real>& generator(Symbol s) const { return generators_[index(s)]; }
  const MoebiusMap<Real>& inverse_generator(Symbol s) const { return inverse_generators_[index(s)]; }

  /// The labelled frontier geodesics a, a', b, b' (indexed by a, A, b, B).
  /// Positive side of a is the interior of circle A; a' = g_a^{-1}(a) carries
  /// the transported side, which is the exterior of circle A'.
  Geodesic<Real> labeled_geodesic(Symbol s) const {
    Geodesic<Real> g = circle(s).geodesic();
    return (s == Symbol::a || s == Symbol::b) ? g : g.flipped();
  }

  /// Left-to-right product g_{x1} o g_{x2} o ... o g_{xn}.
  MoebiusMap<Real> word_to_map(const GroupWord& w) const {
    MoebiusMap<Real> result;
    for (Symbol s : w.letters()) result = result * generator(s);
    return result;
  }

  /// Open region exterior to all four circles.
  bool in_fundamental_domain(const C& z) const {
    if (!(std::norm(z) < Real(1))) return false;
    for (const auto& circle : circles_)
      if (std::norm(z - circle.center()) <= circle.radius() * circle.radius()) return false;
    return true;
  }

  /// Generator whose boundary arc contains p with the given clearance, or
  /// nothing when p lies in a gap (or too close to an arc endpoint).
  std::optional<Symbol> arc_containing(const BoundaryPoint<Real>& p, Real margin = 0) const {
    for (Symbol s : kSymbols)
      if (circle(s).boundary_arc().contains(p, margin)) return s;
    return std::nullopt;
  }

  template <class Other>
  SchottkyGroup<Other> cast() const {
    return SchottkyGroup<Other>(static_cast<Other>(radius_));
  }

 private:
  static std::string describe(Real value) {
    std::ostringstream out;
    out.precision(10);
    out << static_cast<double>(value);
    return out.str();
  }

  static Real checked_center(Real radius) {
    using std::sqrt;
    if (!(radius > 0)) throw ConfigurationRejected("radius must be positive: r = " + describe(radius));
    Real center = sqrt(1 + radius * radius);
    Real adjacent = center * sqrt(Real(2));
    if (!(adjacent > 2 * radius))
      throw ConfigurationRejected("adjacent circles overlap: c*sqrt(2) > 2r violated (c*sqrt(2) = " +
                                  describe(adjacent) + ", 2r = " + describe(2 * radius) + ")");
    if (!(2 * center > 2 * radius))
      throw ConfigurationRejected("opposite circles overlap: 2c > 2r violated (2c = " + describe(2 * center) +
                                  ", 2r = " + describe(2 * radius) + ")");
    return center;
  }

  static std::array<GeneratorCircle<Real>, 4> make_circles(Real c, Real radius) {
    const C i(0, 1);
    return {GeneratorCircle<Real>(C(c), radius), GeneratorCircle<Real>(C(-c), radius),
            GeneratorCircle<Real>(i * c, radius), GeneratorCircle<Real>(-i * c, radius)};
  }

  static std::array<MoebiusMap<Real>, 4> make_generators(Real c) {
    const C i(0, 1);
    MoebiusMap<Real> ga(C(c), C(1), C(1), C(c));
    MoebiusMap<Real> gb(C(c), i, -i, C(c));
    return {ga, ga.inverse(), gb, gb.inverse()};
  }

  Real radius_;
  Real center_;
  std::array<GeneratorCircle<Real>, 4> circles_;
  std::array<MoebiusMap<Real>, 4> generators_;
  std::array<MoebiusMap<Real>, 4> inverse_generators_;
};

template <class Real>
MoebiusMap<Real> word_to_map(const SchottkyGroup<Real>& group, const GroupWord& w) {
  return group.word_to_map(w);
}

/// Moves a labelled geodesic (or a translate of one) by the word's element;
/// the positive side is transported with it.
template <class Real>
Geodesic<Real> translate_geodesic_labels(const SchottkyGroup<Real>& group, const GroupWord& w,
                                         const Geodesic<Real>& g) {
  return group.word_to_map(w).apply(g);
}

using Group = SchottkyGroup<double>;

}  // namespace schottky
