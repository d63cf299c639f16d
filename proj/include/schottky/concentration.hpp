#pragma once

// Depth-limited witness searches for concentrating an arc U at a limit point
// p, for geodesic separation, and the constructive chain argument that turns
// a recurring block of the crossing sequence into a controlled witness.
//
// Words are scanned by length, then lexicographically (a < A < b < B); the
// first hit wins. Within one length the scan is partitioned by first letter,
// and the winner is the hit of the earliest partition, so any number of
// worker threads reports the same word and the same examined count.

#include <algorithm>
#include <cstdint>
#include <future>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "schottky/coding.hpp"
#include "schottky/errors.hpp"
#include "schottky/group.hpp"
#include "schottky/hyperbolic.hpp"
#include "schottky/sequence.hpp"
#include "schottky/word.hpp"

namespace schottky {

inline constexpr double kContainmentMargin = 1e-10;

enum class Outcome { witness, exhausted };

/// Direction in which an oriented geodesic crosses the ray from 0 to p.
/// Facing p from the origin, left is the counterclockwise side.
enum class CrossingDirection { left_to_right, right_to_left };

inline const char* to_string(Outcome o) { return o == Outcome::witness ? "witness" : "exhausted"; }
inline const char* to_string(CrossingDirection d) {
  return d == CrossingDirection::left_to_right ? "left-to-right" : "right-to-left";
}

struct Check {
  std::string name;
  bool passed = false;
};

struct WitnessReport {
  Outcome outcome = Outcome::exhausted;
  std::optional<GroupWord> word;
  std::size_t max_len = 0;
  /// Words a length-lex scan examines up to the witness (inclusive), or all
  /// words of length <= max_len when exhausted. The identity counts.
  std::uint64_t words_examined = 0;
  /// Containments recomputed from a fresh word_to_map.
  std::vector<Check> verification;
  std::optional<CrossingDirection> direction;
  /// Chain searches: the recurrence index m.
  std::optional<std::size_t> recurrence_index;

  bool found() const { return outcome == Outcome::witness; }
  bool verified() const {
    return found() && std::all_of(verification.begin(), verification.end(), [](const Check& c) { return c.passed; });
  }
};

struct ConcentrationTask {
  BoundaryPoint<double> p;
  Arc<double> u;
  Arc<double> v;
  bool control = false;
  std::size_t max_len = 10;
  double margin = kContainmentMargin;

  ConcentrationTask(BoundaryPoint<double> p_, Arc<double> u_, Arc<double> v_, bool control_, std::size_t max_len_)
      : p(p_), u(u_), v(v_), control(control_), max_len(max_len_) {}

  void validate() const {
    if (!u.proper() || !v.proper()) throw InvalidArgument("concentration arcs must be proper");
    if (!u.contains(p, margin)) throw InvalidArgument("p must lie in U");
    if (!v.contains(p, margin)) throw InvalidArgument("p must lie in V");
  }
};

struct SearchOptions {
  /// 1 scans serially; more run the four first-letter partitions concurrently.
  unsigned threads = 1;
};

/// Number of reduced words of length <= L, including the identity.
inline std::uint64_t words_up_to(std::size_t max_len) {
  std::uint64_t total = 0;
  for (std::size_t l = 0; l <= max_len; ++l) total += reduced_word_count(l);
  return total;
}

namespace detail {

struct PartitionHit {
  std::vector<Symbol> letters;
  /// 1-based rank of the hit within its partition, in lex order.
  std::uint64_t rank = 0;
};

template <class Predicate>
class PartitionScan {
 public:
  PartitionScan(const Group& group, const Predicate& predicate, std::size_t length)
      : group_(group), predicate_(predicate), length_(length) {
    letters_.resize(length);
    maps_.resize(length);
  }

  std::optional<PartitionHit> run(Symbol first) {
    letters_[0] = first;
    maps_[0] = group_.generator(first);
    if (visit(1)) return PartitionHit{letters_, count_};
    return std::nullopt;
  }

 private:
  bool visit(std::size_t depth) {
    if (depth == length_) {
      ++count_;
      return predicate_(maps_[depth - 1]);
    }
    for (Symbol s : kSymbols) {
      if (is_forbidden_pair(letters_[depth - 1], s)) continue;
      letters_[depth] = s;
      maps_[depth] = maps_[depth - 1] * group_.generator(s);
      if (visit(depth + 1)) return true;
    }
    return false;
  }

  const Group& group_;
  const Predicate& predicate_;
  std::size_t length_;
  std::vector<Symbol> letters_;
  std::vector<MoebiusMap<double>> maps_;
  std::uint64_t count_ = 0;
};

struct ScanResult {
  std::optional<GroupWord> word;
  std::uint64_t examined = 0;
};

/// First word in length-lex order (identity included) whose map satisfies
/// `predicate`.
template <class Predicate>
ScanResult scan_words(const Group& group, std::size_t max_len, const SearchOptions& options,
                      const Predicate& predicate) {
  ScanResult result;
  result.examined = 1;
  if (predicate(MoebiusMap<double>())) {
    result.word = GroupWord();
    return result;
  }
  for (std::size_t length = 1; length <= max_len; ++length) {
    std::array<std::optional<PartitionHit>, 4> hits;
    auto run = [&](Symbol first) { return PartitionScan<Predicate>(group, predicate, length).run(first); };
    if (options.threads > 1) {
      std::array<std::future<std::optional<PartitionHit>>, 4> futures;
      for (Symbol s : kSymbols) futures[index(s)] = std::async(std::launch::async, run, s);
      for (Symbol s : kSymbols) hits[index(s)] = futures[index(s)].get();
    } else {
      for (Symbol s : kSymbols) {
        hits[index(s)] = run(s);
        if (hits[index(s)]) break;
      }
    }
    const std::uint64_t partition_size = reduced_word_count(length) / 4;
    for (Symbol s : kSymbols) {
      const auto& hit = hits[index(s)];
      if (hit) {
        result.word = GroupWord(hit->letters);
        result.examined += hit->rank;
        return result;
      }
      result.examined += partition_size;
    }
  }
  return result;
}

/// Containment tests on the counterclockwise span s -> e given by raw
/// endpoints; an image span can collapse to a single representable angle.
inline bool span_contains(const BoundaryPoint<double>& s, const BoundaryPoint<double>& e,
                          const BoundaryPoint<double>& p, double margin) {
  double length = s.ccw_offset_to(e);
  double offset = s.ccw_offset_to(p);
  return length > 0 && offset > margin && offset < length - margin;
}

inline bool arc_contains_span(const Arc<double>& target, const BoundaryPoint<double>& s,
                              const BoundaryPoint<double>& e, double margin) {
  double first = target.start().ccw_offset_to(s);
  double last = target.start().ccw_offset_to(e);
  return first > margin && last < target.length() - margin && first < last;
}


}  // namespace detail

/// Checks for one candidate map; shared by the scan and the re-verification.
inline std::vector<Check> concentration_checks(const MoebiusMap<double>& map, const ConcentrationTask& task) {
  BoundaryPoint<double> us = map.apply(task.u.start());
  BoundaryPoint<double> ue = map.apply(task.u.end());
  std::vector<Check> checks{{"p in image(U)", detail::span_contains(us, ue, task.p, task.margin)},
                            {"image(U) inside V", detail::arc_contains_span(task.v, us, ue, task.margin)}};
  if (task.control)
    checks.push_back({"p in image(V)", detail::span_contains(map.apply(task.v.start()), map.apply(task.v.end()),
                                                             task.p, task.margin)});
  return checks;
}

/// Shortest, then lexicographically first, word w with p in w(U), w(U)
/// inside V and (with control) p in w(V).
inline WitnessReport search_concentration(const Group& group, const ConcentrationTask& task,
                                          const SearchOptions& options = {}) {
  task.validate();
  auto predicate = [&task](const MoebiusMap<double>& map) {
    BoundaryPoint<double> us = map.apply(task.u.start());
    BoundaryPoint<double> ue = map.apply(task.u.end());
    if (!detail::arc_contains_span(task.v, us, ue, task.margin) || !detail::span_contains(us, ue, task.p, task.margin))
      return false;
    return !task.control ||
           detail::span_contains(map.apply(task.v.start()), map.apply(task.v.end()), task.p, task.margin);
  };
  detail::ScanResult scan = detail::scan_words(group, task.max_len, options, predicate);
  WitnessReport report;
  report.max_len = task.max_len;
  if (!scan.word) {
    report.words_examined = words_up_to(task.max_len);
    return report;
  }
  report.outcome = Outcome::witness;
  report.word = scan.word;
  report.words_examined = scan.examined;
  report.verification = concentration_checks(group.word_to_map(*scan.word), task);
  return report;
}

/// Side of p on which a boundary point lies, measured inside the arc V
/// (counterclockwise of p is left).
inline CrossingDirection crossing_direction(const Arc<double>& v, const BoundaryPoint<double>& p,
                                            const BoundaryPoint<double>& image_start) {
  return v.start().ccw_offset_to(image_start) > v.start().ccw_offset_to(p) ? CrossingDirection::left_to_right
                                                                          : CrossingDirection::right_to_left;
}

/// Separation checks for the image of lambda: both endpoints in V, on
/// opposite sides of p, and equivalently the arc they bound around p lies in
/// V.
inline std::vector<Check> separation_checks(const MoebiusMap<double>& map, const BoundaryPoint<double>& p,
                                            const Geodesic<double>& lambda, const Arc<double>& v, double margin) {
  BoundaryPoint<double> s = map.apply(lambda.start());
  BoundaryPoint<double> e = map.apply(lambda.end());
  bool inside = v.contains(s, margin) && v.contains(e, margin);
  double os = v.start().ccw_offset_to(s);
  double oe = v.start().ccw_offset_to(e);
  double op = v.start().ccw_offset_to(p);
  bool opposite = std::min(os, oe) + margin < op && op < std::max(os, oe) - margin;
  bool arc_inside = false;
  if (s.angle() != e.angle()) {
    Arc<double> around(s, e);
    if (!around.contains(p)) around = around.complement();
    arc_inside = around.contains(p, margin) && v.contains(around, margin);
  }
  return {{"image endpoints inside V", inside},
          {"image endpoints on opposite sides of p", opposite},
          {"arc bounded by image endpoints inside V", arc_inside}};
}

/// A word moving the oriented geodesic lambda so its endpoints lie in V on
/// both sides of p. `required`, when set, restricts to one crossing
/// direction of the image.
inline WitnessReport search_separation(const Group& group, const BoundaryPoint<double>& p,
                                       const Geodesic<double>& lambda, const Arc<double>& v, std::size_t max_len,
                                       std::optional<CrossingDirection> required = std::nullopt,
                                       const SearchOptions& options = {}, double margin = kContainmentMargin) {
  if (!v.proper()) throw InvalidArgument("separation target V must be a proper arc");
  if (!v.contains(p, margin)) throw InvalidArgument("p must lie in V");
  if (p.distance_to(lambda.start()) <= margin || p.distance_to(lambda.end()) <= margin)
    throw InvalidArgument("p must not be an endpoint of lambda");
  auto predicate = [&](const MoebiusMap<double>& map) {
    BoundaryPoint<double> s = map.apply(lambda.start());
    BoundaryPoint<double> e = map.apply(lambda.end());
    if (!v.contains(s, margin) || !v.contains(e, margin)) return false;
    double os = v.start().ccw_offset_to(s);
    double oe = v.start().ccw_offset_to(e);
    double op = v.start().ccw_offset_to(p);
    if (!(std::min(os, oe) + margin < op && op < std::max(os, oe) - margin)) return false;
    return !required || crossing_direction(v, p, s) == *required;
  };
  detail::ScanResult scan = detail::scan_words(group, max_len, options, predicate);
  WitnessReport report;
  report.max_len = max_len;
  if (!scan.word) {
    report.words_examined = words_up_to(max_len);
    return report;
  }
  MoebiusMap<double> map = group.word_to_map(*scan.word);
  report.outcome = Outcome::witness;
  report.word = scan.word;
  report.words_examined = scan.examined;
  report.verification = separation_checks(map, p, lambda, v, margin);
  report.direction = crossing_direction(v, p, map.apply(lambda.start()));
  return report;
}

/// Geodesic joining two crossed translates lambda_i (larger) and lambda_j
/// (smaller) across p, and the arc around p it cuts off.
struct Bridge {
  Geodesic<double> lambda;
  Arc<double> u;
};

/// Which endpoint pair the bridge joins. `left_to_right` runs from the left
/// endpoint of lambda_i to the right endpoint of lambda_j, so the bridge
/// itself crosses the ray from left to right; `right_to_left` is its mirror.
enum class BridgeChirality { left_to_right, right_to_left };

/// Each cylinder arc U_n runs counterclockwise from its right endpoint to
/// its left endpoint as seen from the origin facing p.
inline Bridge bridge(const Group& group, const SymbolicSequence& s, std::size_t i, std::size_t j,
                     BridgeChirality chirality = BridgeChirality::left_to_right) {
  if (!(i >= 1 && i < j)) throw InvalidArgument("bridge needs 1 <= i < j");
  Arc<double> outer = cylinder_arc(group, s, i);
  Arc<double> inner = cylinder_arc(group, s, j);
  if (chirality == BridgeChirality::left_to_right)
    return {Geodesic<double>(outer.end(), inner.start()), Arc<double>(inner.start(), outer.end())};
  return {Geodesic<double>(outer.start(), inner.end()), Arc<double>(outer.start(), inner.end())};
}

/// Constructive direction of the recurrence criterion: the smallest
/// m >= max(M, k + 1) with x_{1+i} = x_{m+i} for 0 <= i <= k (1-based) gives
/// gamma = x_1 ... x_{m-1}, which carries lambda_1 to lambda_m. Verified:
/// gamma(U_1) = U_m, U_m inside V, p in gamma(U_{1+k}) and p in gamma(V).
/// V defaults to U_{max(k, 1)}. Candidates failing verification are skipped;
/// the scan ends where U_m becomes narrower than the margin.
inline WitnessReport search_controlled_chain(const Group& group, const SymbolicSequence& s, std::size_t k,
                                             std::size_t big_m, std::size_t max_depth,
                                             std::optional<Arc<double>> v = std::nullopt,
                                             double margin = kContainmentMargin) {
  WitnessReport report;
  report.max_len = max_depth;
  std::size_t available = s.length() ? std::min(max_depth, *s.length()) : max_depth;
  if (available < k + 2) return report;
  std::vector<Symbol> x = s.prefix(available);
  BoundaryPoint<double> p = decode(group, s, 1e-13).point;
  Arc<double> target = v ? *v : cylinder_arc(group, s, std::max<std::size_t>(k, 1));
  Arc<double> u1 = cylinder_arc(group, s, 1);
  Arc<double> u1k = cylinder_arc(group, s, 1 + k);
  std::uint64_t examined = 0;
  for (std::size_t m = std::max(big_m, k + 1); m + k <= available; ++m) {
    ++examined;
    bool match = true;
    for (std::size_t i = 0; i <= k && match; ++i) match = x[i] == x[m - 1 + i];
    if (!match) continue;
    Arc<double> um = cylinder_arc(group, s, m);
    // Past this depth U_m cannot clear the containment margin in double.
    if (!(um.length() > 2 * margin)) break;
    GroupWord gamma(std::vector<Symbol>(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(m - 1)));
    MoebiusMap<double> map = group.word_to_map(gamma);
    BoundaryPoint<double> s1 = map.apply(u1.start());
    BoundaryPoint<double> e1 = map.apply(u1.end());
    // p-memberships are tested as gamma^-1(p) in U_{1+k} and V, where the
    // arcs are macroscopic; gamma(U_{1+k}) itself may be narrower than the
    // margin.
    BoundaryPoint<double> pulled = map.inverse().apply(p);
    std::vector<Check> checks{
        {"gamma(U_1) = U_m", s1.approx_equal(um.start(), kCompareTol) && e1.approx_equal(um.end(), kCompareTol)},
        {"U_m inside V", target.contains(um, margin)},
        {"p in gamma(U_{1+k})", u1k.contains(pulled, margin)},
        {"p in gamma(V)", target.contains(pulled, margin)}};
    bool ok = std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
    if (!ok) continue;
    report.outcome = Outcome::witness;
    report.word = gamma;
    report.recurrence_index = m;
    report.verification = std::move(checks);
    report.words_examined = examined;
    return report;
  }
  report.words_examined = examined;
  return report;
}

}  // namespace schottky
