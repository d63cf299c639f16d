#pragma once

// Poincare-disc primitives: disc automorphisms, boundary points stored as
// angles, counterclockwise arcs, oriented geodesics and the hyperbolic
// metric. Everything is templated on the real scalar so precision-hungry
// computations (deep nested circles) can run in quad precision while the
// rest of the library uses double.

#include <cmath>
#include <complex>
#include <string>

#include "schottky/errors.hpp"

namespace schottky {

template <class Real>
using Complex = std::complex<Real>;

/// Comparison tolerance for derived geometric quantities.
inline constexpr double kCompareTol = 1e-10;
/// Normalization tolerance: unit determinant, orthogonality, angle equality.
inline constexpr double kNormalizeTol = 1e-12;
/// Minimum angular separation of the two endpoints of a geodesic.
inline constexpr double kEndpointSeparation = 1e-10;

template <class Real>
Real pi() {
  using std::acos;
  static const Real value = acos(Real(-1));
  return value;
}

template <class Real>
Real two_pi() {
  static const Real value = 2 * pi<Real>();
  return value;
}

/// Reduces an angle to the half-open range [0, 2pi).
template <class Real>
Real wrap_angle(Real angle) {
  using std::fmod;
  Real wrapped = fmod(angle, two_pi<Real>());
  if (wrapped < 0) wrapped += two_pi<Real>();
  if (wrapped >= two_pi<Real>()) wrapped = 0;
  return wrapped;
}

template <class Real>
Complex<Real> unit(Real angle) {
  using std::cos;
  using std::sin;
  return {cos(angle), sin(angle)};
}

template <class Real>
class BoundaryPoint {
 public:
  BoundaryPoint() = default;
  explicit BoundaryPoint(Real angle) : angle_(wrap_angle(angle)) {}

  /// Radial projection of a nonzero complex number onto S^1.
  static BoundaryPoint from_complex(const Complex<Real>& z) {
    using std::atan2;
    return BoundaryPoint(atan2(z.imag(), z.real()));
  }

  Real angle() const { return angle_; }
  Complex<Real> to_complex() const { return unit(angle_); }

  /// Counterclockwise angular offset from this point to `other`, in [0, 2pi).
  Real ccw_offset_to(const BoundaryPoint& other) const { return wrap_angle(other.angle_ - angle_); }

  Real distance_to(const BoundaryPoint& other) const {
    using std::min;
    Real forward = ccw_offset_to(other);
    return min(forward, two_pi<Real>() - forward);
  }

  bool approx_equal(const BoundaryPoint& other, Real tol = Real(kNormalizeTol)) const {
    return distance_to(other) <= tol;
  }

  BoundaryPoint antipode() const { return BoundaryPoint(angle_ + pi<Real>()); }

  template <class Other>
  BoundaryPoint<Other> cast() const {
    return BoundaryPoint<Other>(static_cast<Other>(angle_));
  }

 private:
  Real angle_ = 0;
};

/// Open counterclockwise interval of S^1 from `start` to `end`. A non-proper
/// arc is all of S^1.
template <class Real>
class Arc {
 public:
  Arc(BoundaryPoint<Real> start, BoundaryPoint<Real> end) : start_(start), end_(end) {
    // Exact test: deep cylinder arcs are legitimately narrower than any
    // fixed angular tolerance.
    if (start.angle() == end.angle()) throw InvalidArgument("arc endpoints coincide");
  }

  static Arc full_circle() { return Arc(); }

  /// Symmetric arc of the given half-width around `center`.
  static Arc centered(BoundaryPoint<Real> center, Real half_width) {
    if (!(half_width > 0) || !(half_width < pi<Real>()))
      throw InvalidArgument("arc half-width must lie in (0, pi)");
    return Arc(BoundaryPoint<Real>(center.angle() - half_width),
               BoundaryPoint<Real>(center.angle() + half_width));
  }

  const BoundaryPoint<Real>& start() const { return start_; }
  const BoundaryPoint<Real>& end() const { return end_; }
  bool proper() const { return proper_; }

  Real length() const { return proper_ ? start_.ccw_offset_to(end_) : two_pi<Real>(); }
  BoundaryPoint<Real> midpoint() const { return BoundaryPoint<Real>(start_.angle() + length() / 2); }
  Arc complement() const { return Arc(end_, start_); }

  /// True when `p` lies in the arc at least `margin` away from both endpoints.
  bool contains(const BoundaryPoint<Real>& p, Real margin = 0) const {
    if (!proper_) return true;
    Real offset = start_.ccw_offset_to(p);
    return offset > margin && offset < length() - margin;
  }

  /// Strict containment of another arc, with `margin` clearance at both ends.
  bool contains(const Arc& other, Real margin = 0) const {
    if (!proper_) return true;
    if (!other.proper_) return false;
    Real span = length();
    Real first = start_.ccw_offset_to(other.start_);
    Real last = start_.ccw_offset_to(other.end_);
    return first > margin && last < span - margin && first < last;
  }

 private:
  Arc() : proper_(false) {}

  BoundaryPoint<Real> start_;
  BoundaryPoint<Real> end_;
  bool proper_ = true;
};

/// Geodesic of the disc, given by its ideal endpoints. The positive side is
/// the half-plane facing the counterclockwise arc from `start` to `end`.
template <class Real>
class Geodesic {
 public:
  Geodesic(BoundaryPoint<Real> start, BoundaryPoint<Real> end) : start_(start), end_(end) {
    if (start.distance_to(end) < Real(kEndpointSeparation))
      throw InvalidArgument("geodesic endpoints must be distinct");
  }

  /// Geodesic bounding `arc`, positive side facing it.
  static Geodesic facing(const Arc<Real>& arc) { return Geodesic(arc.start(), arc.end()); }

  const BoundaryPoint<Real>& start() const { return start_; }
  const BoundaryPoint<Real>& end() const { return end_; }

  Arc<Real> positive_arc() const { return Arc<Real>(start_, end_); }
  Arc<Real> negative_arc() const { return Arc<Real>(end_, start_); }

  /// Same geodesic with the positive side swapped.
  Geodesic flipped() const { return Geodesic(end_, start_); }

  /// Direction of the midpoint of the positive arc.
  Real normal_angle() const { return start_.angle() + half_span(); }
  /// Half the angular length of the positive arc, in (0, pi).
  Real half_span() const { return start_.ccw_offset_to(end_) / 2; }

  /// Signed side function: positive on the positive side, zero on the
  /// geodesic. It vanishes exactly on the circle orthogonal to S^1 through
  /// the endpoints (or the diameter when the endpoints are antipodal).
  Real side_value(const Complex<Real>& z) const {
    using std::cos;
    Real delta = half_span();
    Complex<Real> normal = unit(normal_angle());
    return 2 * (z * std::conj(normal)).real() - (std::norm(z) + 1) * cos(delta);
  }

  bool on_positive_side(const Complex<Real>& z) const { return side_value(z) > 0; }

  /// Euclidean gradient of side_value at z; points into the positive side.
  Complex<Real> positive_normal(const Complex<Real>& z) const {
    using std::cos;
    return unit(normal_angle()) - z * cos(half_span());
  }

  /// Is this the diameter through the origin (within `tol` radians)?
  bool is_diameter(Real tol = Real(kNormalizeTol)) const {
    using std::abs;
    return abs(2 * half_span() - pi<Real>()) <= tol;
  }

  bool same_endpoints(const Geodesic& other, Real tol = Real(kCompareTol)) const {
    return (start_.approx_equal(other.start_, tol) && end_.approx_equal(other.end_, tol)) ||
           (start_.approx_equal(other.end_, tol) && end_.approx_equal(other.start_, tol));
  }

 private:
  BoundaryPoint<Real> start_;
  BoundaryPoint<Real> end_;
};

/// Euclidean circle orthogonal to S^1; its intersection with the disc is a
/// geodesic and it cuts off the boundary arc inside it.
template <class Real>
class GeneratorCircle {
 public:
  GeneratorCircle(Complex<Real> center, Real radius) : center_(center), radius_(radius) {
    using std::abs;
    if (!(radius > 0)) throw InvalidArgument("circle radius must be positive");
    Real defect = std::norm(center) - 1 - radius * radius;
    if (abs(defect) > Real(kNormalizeTol) * (1 + std::norm(center)))
      throw InvalidArgument("circle is not orthogonal to the unit circle");
  }

  /// The circle orthogonal to S^1 that cuts off `arc`. The arc must be
  /// shorter than a half circle.
  static GeneratorCircle cutting_off(const Arc<Real>& arc) {
    using std::cos;
    using std::tan;
    Real delta = arc.length() / 2;
    if (!arc.proper() || !(delta < pi<Real>() / 2))
      throw InvalidArgument("arc too long to be cut off by a finite orthogonal circle");
    Complex<Real> direction = unit(arc.midpoint().angle());
    return GeneratorCircle(direction / cos(delta), tan(delta));
  }

  const Complex<Real>& center() const { return center_; }
  Real radius() const { return radius_; }

  /// Half-angle subtended at the origin by the boundary arc inside.
  Real half_angle() const {
    using std::atan;
    return atan(radius_);
  }

  Arc<Real> boundary_arc() const {
    using std::arg;
    Real direction = arg(center_);
    Real delta = half_angle();
    return Arc<Real>(BoundaryPoint<Real>(direction - delta), BoundaryPoint<Real>(direction + delta));
  }

  /// Geodesic along the circle with the positive side facing the interior.
  Geodesic<Real> geodesic() const { return Geodesic<Real>::facing(boundary_arc()); }

  bool contains(const Complex<Real>& z) const { return std::norm(z - center_) < radius_ * radius_; }

  Complex<Real> point_at(Real t) const { return center_ + radius_ * unit(t); }

 private:
  Complex<Real> center_;
  Real radius_;
};

/// Fractional linear map z -> (a z + b) / (c z + d), kept at unit determinant.
template <class Real>
class MoebiusMap {
 public:
  using C = Complex<Real>;

  MoebiusMap() : a_(1), b_(0), c_(0), d_(1) {}
  MoebiusMap(C a, C b, C c, C d) : a_(a), b_(b), c_(c), d_(d) { normalize(); }

  static MoebiusMap identity() { return MoebiusMap(); }

  /// Rotation about the origin by `angle`.
  static MoebiusMap rotation(Real angle) {
    using std::cos;
    using std::sin;
    return MoebiusMap(unit(angle / 2), C(0), C(0), unit(-angle / 2));
  }

  const C& a() const { return a_; }
  const C& b() const { return b_; }
  const C& c() const { return c_; }
  const C& d() const { return d_; }

  C determinant() const { return a_ * d_ - b_ * c_; }

  C apply(const C& z) const { return (a_ * z + b_) / (c_ * z + d_); }

  BoundaryPoint<Real> apply(const BoundaryPoint<Real>& p) const {
    return BoundaryPoint<Real>::from_complex(apply(p.to_complex()));
  }

  Arc<Real> apply(const Arc<Real>& arc) const {
    if (!arc.proper()) return arc;
    return Arc<Real>(apply(arc.start()), apply(arc.end()));
  }

  /// Orientation-preserving maps carry the positive side along.
  Geodesic<Real> apply(const Geodesic<Real>& g) const { return Geodesic<Real>(apply(g.start()), apply(g.end())); }

  MoebiusMap inverse() const { return MoebiusMap(d_, -b_, -c_, a_); }

  /// (this o other)(z) = this(other(z)).
  MoebiusMap operator*(const MoebiusMap& other) const {
    return MoebiusMap(a_ * other.a_ + b_ * other.c_, a_ * other.b_ + b_ * other.d_,
                      c_ * other.a_ + d_ * other.c_, c_ * other.b_ + d_ * other.d_);
  }

  /// Disc automorphisms have the form [[alpha, beta], [conj(beta), conj(alpha)]]
  /// up to sign.
  bool is_disc_preserving(Real tol = Real(kNormalizeTol)) const {
    using std::abs;
    Real scale = 1 + std::norm(a_) + std::norm(b_);
    bool plus = abs(c_ - std::conj(b_)) <= tol * scale && abs(d_ - std::conj(a_)) <= tol * scale;
    bool minus = abs(c_ + std::conj(b_)) <= tol * scale && abs(d_ + std::conj(a_)) <= tol * scale;
    return plus || minus;
  }

  /// Hyperbolic displacement of the origin: cosh d(0, f(0)) = |a|^2 + |c|^2
  /// for a unit-determinant disc automorphism. Stable even when f(0) is too
  /// close to S^1 to be represented.
  Real displacement_of_origin() const {
    using std::acosh;
    using std::max;
    return acosh(max(Real(1), std::norm(a_) + std::norm(c_)));
  }

  bool approx_equal(const MoebiusMap& other, Real tol = Real(kCompareTol)) const {
    using std::abs;
    auto close = [&](Real sign) {
      return abs(a_ - sign * other.a_) <= tol && abs(b_ - sign * other.b_) <= tol &&
             abs(c_ - sign * other.c_) <= tol && abs(d_ - sign * other.d_) <= tol;
    };
    return close(1) || close(-1);
  }

  template <class Other>
  MoebiusMap<Other> cast() const {
    auto conv = [](const C& z) { return Complex<Other>(static_cast<Other>(z.real()), static_cast<Other>(z.imag())); };
    return MoebiusMap<Other>(conv(a_), conv(b_), conv(c_), conv(d_));
  }

 private:
  void normalize() {
    using std::abs;
    using std::sqrt;
    C det = determinant();
    if (abs(det) == Real(0)) throw InvalidArgument("singular Moebius matrix");
    C scale = sqrt(det);
    a_ /= scale;
    b_ /= scale;
    c_ /= scale;
    d_ /= scale;
  }

  C a_, b_, c_, d_;
};

template <class Real>
MoebiusMap<Real> compose(const MoebiusMap<Real>& f, const MoebiusMap<Real>& g) {
  return f * g;
}

template <class Real>
BoundaryPoint<Real> apply_boundary(const MoebiusMap<Real>& f, const BoundaryPoint<Real>& p) {
  return f.apply(p);
}

/// Image of an orthogonal circle. The image is the unique circle orthogonal
/// to S^1 through the images of the two boundary intersection points.
template <class Real>
GeneratorCircle<Real> apply_circle(const MoebiusMap<Real>& f, const GeneratorCircle<Real>& circle) {
  if (!(circle.radius() > 0)) throw InvalidArgument("circle radius must be positive");
  Arc<Real> image = f.apply(circle.boundary_arc());
  if (image.length() > pi<Real>()) image = image.complement();
  return GeneratorCircle<Real>::cutting_off(image);
}

template <class Real>
void require_in_disc(const Complex<Real>& z, const char* what) {
  if (!(std::norm(z) < Real(1))) throw InvalidArgument(std::string(what) + " must lie in the open unit disc");
}

template <class Real>
Real hyperbolic_distance(const Complex<Real>& z, const Complex<Real>& w) {
  using std::abs;
  using std::atanh;
  require_in_disc(z, "z");
  require_in_disc(w, "w");
  Real ratio = abs(z - w) / abs(Real(1) - std::conj(z) * w);
  return 2 * atanh(ratio);
}

/// Do the endpoints of g1 separate the endpoints of g2 on S^1?
template <class Real>
bool geodesics_cross(const Geodesic<Real>& g1, const Geodesic<Real>& g2) {
  const BoundaryPoint<Real>* points[] = {&g1.start(), &g1.end(), &g2.start(), &g2.end()};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (points[i]->distance_to(*points[j]) < Real(kCompareTol))
        throw AmbiguousConfiguration("geodesics share an endpoint within tolerance");
  Arc<Real> side = g1.positive_arc();
  return side.contains(g2.start()) != side.contains(g2.end());
}

template <class Real>
Real distance_point_to_geodesic(const Complex<Real>& z, const Geodesic<Real>& g) {
  using std::abs;
  using std::asinh;
  using std::sin;
  require_in_disc(z, "z");
  return asinh(abs(g.side_value(z)) / ((1 - std::norm(z)) * sin(g.half_span())));
}

/// Distance from the origin to a geodesic: sinh d = |cot(half span)|.
template <class Real>
Real distance_origin_to_geodesic(const Geodesic<Real>& g) {
  using std::abs;
  using std::asinh;
  using std::cos;
  using std::sin;
  Real delta = g.half_span();
  return asinh(abs(cos(delta)) / sin(delta));
}

/// Intersection point of two crossing geodesics.
template <class Real>
Complex<Real> geodesic_intersection(const Geodesic<Real>& g1, const Geodesic<Real>& g2) {
  using std::abs;
  using std::cos;
  using std::sqrt;
  if (!geodesics_cross(g1, g2)) throw InvalidArgument("geodesics do not cross");
  // Both satisfy 2 Re(z conj(n_j)) = (|z|^2 + 1) cos(delta_j); eliminating
  // |z|^2 puts z on a diameter, leaving a quadratic in the signed radius.
  Complex<Real> n1 = unit(g1.normal_angle());
  Complex<Real> n2 = unit(g2.normal_angle());
  Real c1 = cos(g1.half_span());
  Real c2 = cos(g2.half_span());
  Complex<Real> u = n1 * c2 - n2 * c1;
  if (abs(u) < Real(kNormalizeTol)) return Complex<Real>(0);
  Complex<Real> v = Complex<Real>(0, 1) * u / abs(u);
  bool use_first = abs(c1) >= abs(c2);
  Real cj = use_first ? c1 : c2;
  Real k = (v * std::conj(use_first ? n1 : n2)).real();
  if (abs(cj) < Real(kNormalizeTol)) return Complex<Real>(0);
  Real disc = k * k - cj * cj;
  if (disc < 0) disc = 0;
  Real root = sqrt(disc);
  Real t = cj / (k + (k >= 0 ? root : -root));
  return v * t;
}

}  // namespace schottky
