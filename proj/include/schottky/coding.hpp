#pragma once

// The two directions of the coding between reduced sequences and limit
// points, plus the geometric crossing sequence of the ray from the origin.
//
// Symbol x corresponds to generator g_x and to the boundary arc cut off by
// circle(x). The n-th crossed translate is lambda_n = W_{n-1}(circle(x_n)) with
// W_n = g_{x1} o ... o g_{xn}; it cuts off the cylinder arc U_n which contains
// the limit point. U_1 is strictly larger than U_2, and so on.

#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <vector>

#include "schottky/errors.hpp"
#include "schottky/group.hpp"
#include "schottky/hyperbolic.hpp"
#include "schottky/sequence.hpp"

namespace schottky {

inline constexpr double kDefaultEpsilon = 1e-9;
inline constexpr std::size_t kDefaultMaxLength = 200;

template <class Real>
struct DecodeResult {
  BoundaryPoint<Real> point;
  /// Number of symbols consumed.
  std::size_t depth = 0;
  /// Euclidean diameter of the final circle.
  Real diameter = 0;
  /// Diameters of C_0, C_1, ... (strictly decreasing).
  std::vector<Real> diameters;
};

struct DecodeOptions {
  double epsilon = kDefaultEpsilon;
  /// Consume at least this many symbols even if the circles are already small.
  std::size_t min_depth = 0;
  std::size_t max_depth = 100000;
};

/// Euclidean diameter of the orthogonal circle cutting off an arc.
template <class Real>
Real cut_off_diameter(const Arc<Real>& arc) {
  using std::tan;
  return 2 * tan(arc.length() / 2);
}

/// Nested circles C_n = W_n(circle(x_{n+1})); returns the centre direction of
/// the first one with diameter below epsilon.
template <class Real>
DecodeResult<Real> decode(const SchottkyGroup<Real>& group, const SymbolicSequence& s, const DecodeOptions& options) {
  if (!(options.epsilon > 0)) throw InvalidArgument("epsilon must be positive");
  DecodeResult<Real> result;
  MoebiusMap<Real> prefix_map;
  Real previous = std::numeric_limits<Real>::infinity();
  std::optional<Symbol> last;
  for (std::size_t n = 0;; ++n) {
    if (!s.has_index(n)) throw NeedsMorePrefix(n, static_cast<double>(previous));
    if (n >= options.max_depth)
      throw ToleranceError("decode did not reach epsilon within " + std::to_string(options.max_depth) + " symbols");
    Symbol x = s[n];
    if (last && is_forbidden_pair(*last, x))
      throw InvalidArgument("sequence is not reduced at index " + std::to_string(n));
    last = x;
    auto exhausted = [&] {
      return ToleranceError("precision exhausted at depth " + std::to_string(n + 1) +
                            ": nested circles stopped shrinking (epsilon too small for this scalar type)");
    };
    std::optional<Arc<Real>> image;
    try {
      image = prefix_map.apply(group.circle(x).boundary_arc());
    } catch (const InvalidArgument&) {
      // endpoints merged or the prefix matrix overflowed
      throw exhausted();
    }
    Real diameter = cut_off_diameter(*image);
    if (!(diameter < previous)) throw exhausted();
    previous = diameter;
    result.diameters.push_back(diameter);
    if (diameter < Real(options.epsilon) && n + 1 >= options.min_depth) {
      result.point = image->midpoint();
      result.depth = n + 1;
      result.diameter = diameter;
      return result;
    }
    try {
      prefix_map = prefix_map * group.generator(x);
    } catch (const InvalidArgument&) {
      throw exhausted();
    }
  }
}

template <class Real>
DecodeResult<Real> decode(const SchottkyGroup<Real>& group, const SymbolicSequence& s,
                          double epsilon = kDefaultEpsilon) {
  DecodeOptions options;
  options.epsilon = epsilon;
  return decode(group, s, options);
}

/// Cylinder arc U_n of the first n symbols (n >= 1).
template <class Real>
Arc<Real> cylinder_arc(const SchottkyGroup<Real>& group, const std::vector<Symbol>& prefix) {
  if (prefix.empty()) throw InvalidArgument("cylinder of the empty prefix is the whole circle");
  MoebiusMap<Real> map;
  for (std::size_t i = 0; i + 1 < prefix.size(); ++i) map = map * group.generator(prefix[i]);
  return map.apply(group.circle(prefix.back()).boundary_arc());
}

template <class Real>
Arc<Real> cylinder_arc(const SchottkyGroup<Real>& group, const SymbolicSequence& s, std::size_t n) {
  return cylinder_arc(group, s.prefix(n));
}

/// lambda_n: the translate crossed at the n-th step (1-based), with its
/// transported positive side.
template <class Real>
Geodesic<Real> crossed_translate(const SchottkyGroup<Real>& group, const SymbolicSequence& s, std::size_t n) {
  auto prefix = s.prefix(n);
  MoebiusMap<Real> map;
  for (std::size_t i = 0; i + 1 < prefix.size(); ++i) map = map * group.generator(prefix[i]);
  return map.apply(group.labeled_geodesic(prefix.back()));
}

namespace detail {

/// Generator whose arc contains q, rejecting points within `tol` of any arc
/// endpoint.
template <class Real, class OnGap, class OnAmbiguous>
Symbol locate_arc(const SchottkyGroup<Real>& group, const BoundaryPoint<Real>& q, Real tol, OnGap&& on_gap,
                  OnAmbiguous&& on_ambiguous) {
  for (Symbol s : kSymbols) {
    Arc<Real> arc = group.circle(s).boundary_arc();
    if (q.distance_to(arc.start()) <= tol || q.distance_to(arc.end()) <= tol) on_ambiguous();
    if (arc.contains(q)) return s;
  }
  on_gap();
  return Symbol::a;  // unreachable: on_gap throws
}

}  // namespace detail

/// Symbols of p: repeatedly find the generator arc containing p and pull p
/// back by that generator.
template <class Real>
GroupWord encode(const SchottkyGroup<Real>& group, const BoundaryPoint<Real>& p, std::size_t max_length,
                 Real tol = Real(kNormalizeTol)) {
  if (max_length < 1) throw InvalidArgument("maxLen must be at least 1");
  std::vector<Symbol> symbols;
  symbols.reserve(max_length);
  BoundaryPoint<Real> q = p;
  for (std::size_t i = 0; i < max_length; ++i) {
    Symbol s = detail::locate_arc(
        group, q, tol, [&] { throw NotALimitPoint(i); },
        [&] {
          throw ToleranceError("point within tolerance of a translate's endpoint at depth " + std::to_string(i + 1));
        });
    symbols.push_back(s);
    q = group.inverse_generator(s).apply(q);
  }
  return GroupWord(std::move(symbols));
}

template <class Real>
struct Crossing {
  Symbol symbol;
  /// Crossing point on the ray (Euclidean; rounds onto S^1 for far crossings).
  Complex<Real> point;
  /// Hyperbolic distance from the origin along the ray.
  Real distance;
  /// Angle in (0, pi) between the ray direction and the crossed translate,
  /// oriented with its positive side on its left.
  Real angle;
};

namespace detail {

/// Walks the ray from 0 towards the front endpoint tile by tile. Each tile is
/// handled in the frame where it is the fundamental domain, so only the
/// pulled-back line (back, front) is ever represented. `anchor`, when given,
/// supplies the exact pulled-back front endpoint for step n.
template <class Real>
std::vector<Crossing<Real>> walk_ray(const SchottkyGroup<Real>& group, const BoundaryPoint<Real>& p,
                                     std::size_t max_crossings,
                                     const std::function<BoundaryPoint<Real>(std::size_t)>& anchor) {
  using std::abs;
  using std::acos;
  using std::tanh;
  const Real tol(kNormalizeTol);
  std::vector<Crossing<Real>> crossings;
  crossings.reserve(max_crossings);
  BoundaryPoint<Real> back = p.antipode();
  BoundaryPoint<Real> front = p;
  Complex<Real> previous_point(0);
  Real travelled = 0;
  const Complex<Real> i_unit(0, 1);
  for (std::size_t n = 0; n < max_crossings; ++n) {
    if (anchor) front = anchor(n);
    Symbol exit = locate_arc(
        group, front, tol, [&] { throw NotALimitPoint(n); },
        [&] { throw AmbiguousCrossing("ray passes within tolerance of a translate endpoint at crossing " +
                                      std::to_string(n + 1)); });
    Geodesic<Real> line(back, front);
    Geodesic<Real> labeled = group.labeled_geodesic(exit);
    Complex<Real> z;
    try {
      if (!geodesics_cross(line, labeled))
        throw AmbiguousCrossing("ray does not cross the expected translate at crossing " + std::to_string(n + 1));
      z = geodesic_intersection(line, labeled);
    } catch (const AmbiguousConfiguration& e) {
      throw AmbiguousCrossing(e.what());
    }
    // The positive side of `line` faces the arc from back to front, which lies
    // to the right of the direction of travel.
    Complex<Real> direction = i_unit * line.positive_normal(z);
    direction /= abs(direction);
    Complex<Real> normal = labeled.positive_normal(z);
    normal /= abs(normal);
    Real along = (direction * std::conj(normal)).real();
    if (abs(along) < tol) throw AmbiguousCrossing("ray tangent to a translate at crossing " + std::to_string(n + 1));
    bool positive = along > 0;
    Symbol symbol = is_a_type(exit) ? (positive ? Symbol::a : Symbol::A) : (positive ? Symbol::b : Symbol::B);
    Complex<Real> orientation = -i_unit * normal;
    Real cosine = (direction * std::conj(orientation)).real();
    if (cosine > 1) cosine = 1;
    if (cosine < -1) cosine = -1;

    travelled += hyperbolic_distance(previous_point, z);
    crossings.push_back({symbol, unit(p.angle()) * tanh(travelled / 2), travelled, acos(cosine)});

    const MoebiusMap<Real>& pull = group.inverse_generator(exit);
    back = pull.apply(back);
    front = pull.apply(front);
    previous_point = pull.apply(z);
  }
  return crossings;
}

}  // namespace detail

/// Crossings of the ray 0 -> p with the labelled translates, computed from p
/// alone. Reliable only while p's rounding error, amplified by the pull-back,
/// stays below the arc gaps (roughly 20 crossings in double precision).
template <class Real>
std::vector<Crossing<Real>> ray_crossing_sequence(const SchottkyGroup<Real>& group, const BoundaryPoint<Real>& p,
                                                  std::size_t max_crossings) {
  return detail::walk_ray<Real>(group, p, max_crossings, {});
}

/// Same walk for the limit point of `s`, with the pulled-back endpoint
/// re-anchored at each step from the shifted sequence so depth is not
/// limited by precision.
template <class Real>
std::vector<Crossing<Real>> ray_crossing_sequence(const SchottkyGroup<Real>& group, const SymbolicSequence& s,
                                                  std::size_t max_crossings, double anchor_epsilon = 1e-12) {
  BoundaryPoint<Real> p = decode(group, s, anchor_epsilon).point;
  return detail::walk_ray<Real>(group, p, max_crossings, [&](std::size_t n) {
    return decode(group, s.shifted(n), anchor_epsilon).point;
  });
}

}  // namespace schottky
