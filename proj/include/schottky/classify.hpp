#pragma once

// Finite-depth classification of limit points given by crossing sequences:
// block recurrence (the controlled-concentration criterion), run-length
// certificates for the structured families, the conical probe, and the
// consistency check across the implication chain
// controlled => concentration => separation => conical.

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "schottky/coding.hpp"
#include "schottky/errors.hpp"
#include "schottky/family.hpp"
#include "schottky/group.hpp"
#include "schottky/sequence.hpp"

namespace schottky {

/// Does x_N ... x_{N+k} reappear at some m with N < m <= D - k? Indices are
/// 1-based as in the crossing sequence x_1 x_2 ...
class RecurrenceVerdict {
 public:
  RecurrenceVerdict(const std::vector<Symbol>& prefix, std::size_t block_start, std::size_t window,
                    std::size_t depth, std::vector<std::size_t> positions)
      : block_start_(block_start), window_(window), depth_(depth), positions_(std::move(positions)) {
    for (std::size_t m : positions_) {
      if (!(m > block_start_ && m + window_ <= depth_) || m + window_ > prefix.size())
        throw ToleranceError("recurrence position out of range");
      for (std::size_t i = 0; i <= window_; ++i)
        if (prefix[block_start_ - 1 + i] != prefix[m - 1 + i])
          throw ToleranceError("recurrence position " + std::to_string(m) + " does not repeat the block");
    }
  }

  std::size_t block_start() const { return block_start_; }
  std::size_t window() const { return window_; }
  std::size_t depth() const { return depth_; }
  const std::vector<std::size_t>& positions() const { return positions_; }
  bool recurs() const { return !positions_.empty(); }

 private:
  std::size_t block_start_;
  std::size_t window_;
  std::size_t depth_;
  std::vector<std::size_t> positions_;
};

namespace detail {

inline RecurrenceVerdict scan_block(const std::vector<Symbol>& x, std::size_t block_start, std::size_t window,
                                    std::size_t depth) {
  std::vector<std::size_t> positions;
  for (std::size_t m = block_start + 1; m + window <= depth; ++m) {
    bool match = true;
    for (std::size_t i = 0; i <= window && match; ++i) match = x[block_start - 1 + i] == x[m - 1 + i];
    if (match) positions.push_back(m);
  }
  return RecurrenceVerdict(x, block_start, window, depth, std::move(positions));
}

}  // namespace detail

/// Recurrence of a single block x_N ... x_{N+k} within depth D.
inline RecurrenceVerdict scan_recurrence(const SymbolicSequence& s, std::size_t block_start, std::size_t window,
                                         std::size_t depth) {
  if (block_start < 1) throw InvalidArgument("block start is 1-based");
  if (!(depth > block_start + window)) throw InvalidArgument("depth must exceed N + k");
  return detail::scan_block(s.prefix(depth), block_start, window, depth);
}

/// One verdict per window k = 1 .. max_window. Evidence only: a missing
/// recurrence at depth D is not a proof unless a family certificate backs it.
inline std::vector<RecurrenceVerdict> check_controlled(const SymbolicSequence& s, std::size_t block_start,
                                                       std::size_t max_window, std::size_t depth) {
  if (block_start < 1) throw InvalidArgument("block start is 1-based");
  if (!(depth > block_start + max_window))
    throw InvalidArgument("depth D = " + std::to_string(depth) + " must exceed N + maxWindow = " +
                          std::to_string(block_start + max_window));
  std::vector<Symbol> x = s.prefix(depth);
  std::vector<RecurrenceVerdict> verdicts;
  for (std::size_t k = 1; k <= max_window; ++k) verdicts.push_back(detail::scan_block(x, block_start, k, depth));
  return verdicts;
}

struct NonRecurrenceCertificate {
  std::string family;
  /// b a^{i(1)} b: the first complete run flanked by b's.
  GroupWord block;
  std::size_t block_start = 1;
  /// k with block = x_N ... x_{N+k}.
  std::size_t window = 0;
  std::string reason;
};

/// Run-length argument for the thm42/thm43 families: the a-runs have
/// strictly increasing lengths, so the first one, flanked by b's, never
/// occurs again. Not applicable to literal or periodic specs.
inline std::optional<NonRecurrenceCertificate> certify_family_nonrecurrence(const FamilySpec& spec) {
  const AffineRule* a_runs = nullptr;
  if (const auto* f = std::get_if<AlternatingRunsFamily>(&spec)) a_runs = &f->a_runs;
  if (const auto* f = std::get_if<GrowingRunsFamily>(&spec)) a_runs = &f->a_runs;
  if (!a_runs || !a_runs->strictly_increasing()) return std::nullopt;
  std::uint64_t first = (*a_runs)(1);
  std::vector<Symbol> letters{Symbol::b};
  letters.insert(letters.end(), first, Symbol::a);
  letters.push_back(Symbol::b);
  NonRecurrenceCertificate cert;
  cert.family = render_family(spec);
  cert.block = GroupWord(letters);
  cert.window = letters.size() - 1;
  cert.reason = "a-run lengths i(k) = " + a_runs->to_string() +
                " are strictly increasing, and b a^" + std::to_string(first) +
                " b requires a maximal a-run of length exactly i(1) = " + std::to_string(first) +
                ", which occurs only for k = 1";
  if (std::holds_alternative<AlternatingRunsFamily>(spec))
    cert.reason += "; the interleaved runs use the other letter A and cannot supply it";
  return cert;
}

enum class ConicalEvidence { bounded, unbounded, unknown };

inline const char* to_string(ConicalEvidence e) {
  switch (e) {
    case ConicalEvidence::bounded: return "bounded";
    case ConicalEvidence::unbounded: return "unbounded";
    case ConicalEvidence::unknown: return "unknown";
  }
  return "unknown";
}

inline constexpr double kConicalThreshold = 5.0;

struct ConicalProbe {
  /// distances[n - 1] = d(w_n(0), ray to p) for n = 1 .. depth.
  std::vector<double> distances;
  /// tail_minimum[n - 1] = min over m >= n of d_m.
  std::vector<double> tail_minimum;
  double threshold = kConicalThreshold;
  /// Minimum over the last quarter of indices.
  double last_quartile_minimum = 0;
  ConicalEvidence evidence = ConicalEvidence::unknown;
};

namespace detail {

inline ConicalProbe summarize_probe(std::vector<double> distances, double threshold) {
  ConicalProbe probe;
  probe.threshold = threshold;
  probe.distances = std::move(distances);
  std::size_t depth = probe.distances.size();
  probe.tail_minimum.resize(depth);
  double running = std::numeric_limits<double>::infinity();
  for (std::size_t n = depth; n-- > 0;) {
    running = std::min(running, probe.distances[n]);
    probe.tail_minimum[n] = running;
  }
  std::size_t quartile_start = depth - std::max<std::size_t>(1, depth / 4);
  probe.last_quartile_minimum = probe.tail_minimum[quartile_start];
  probe.evidence = probe.last_quartile_minimum < threshold ? ConicalEvidence::bounded : ConicalEvidence::unbounded;
  return probe;
}

}  // namespace detail

/// Distances from the orbit points w_n(0), w_n = x_1 ... x_n, to the geodesic
/// through `back` and p. Each distance is measured after pulling everything
/// back by w_n: it is then the distance from 0 to the geodesic from
/// w_n^{-1}(back) to w_n^{-1}(p) = decode(shift^n s), which stays well
/// conditioned at any depth.
inline std::vector<double> orbit_distances(const Group& group, const SymbolicSequence& s,
                                           const BoundaryPoint<double>& back, std::size_t depth,
                                           double anchor_epsilon = 1e-12) {
  std::vector<Symbol> x = s.prefix(depth);
  std::vector<double> distances;
  distances.reserve(depth);
  BoundaryPoint<double> r = back;
  for (std::size_t n = 1; n <= depth; ++n) {
    r = group.inverse_generator(x[n - 1]).apply(r);
    BoundaryPoint<double> q = decode(group, s.shifted(n), anchor_epsilon).point;
    distances.push_back(distance_origin_to_geodesic(Geodesic<double>(r, q)));
  }
  return distances;
}

/// Orbit points along the ray 0 -> p. The foot of the perpendicular from
/// w_n(0) to the full geodesic through 0 lies beyond 0 for n >= 1 (w_n(0)
/// lies in the nested circle around p), so the distance to the geodesic is
/// the distance to the ray.
inline ConicalProbe conical_probe(const Group& group, const SymbolicSequence& s, std::size_t depth,
                                  double threshold = kConicalThreshold) {
  if (depth < 2) throw InvalidArgument("conical probe depth must be at least 2");
  BoundaryPoint<double> p = decode(group, s, 1e-12).point;
  return detail::summarize_probe(orbit_distances(group, s, p.antipode(), depth), threshold);
}

/// Maximum of the probe distances over each maximal run of a's or A's, in
/// order (1-based probe indices n with x_n in the run).
inline std::vector<double> run_maxima(const SymbolicSequence& s, const ConicalProbe& probe) {
  std::vector<Symbol> x = s.prefix(probe.distances.size());
  std::vector<double> maxima;
  bool in_run = false;
  for (std::size_t n = 0; n < x.size(); ++n) {
    if (is_a_type(x[n])) {
      if (!in_run) maxima.push_back(0);
      in_run = true;
      maxima.back() = std::max(maxima.back(), probe.distances[n]);
    } else {
      in_run = false;
    }
  }
  // The last run may be cut off by the probe depth.
  if (!x.empty() && is_a_type(x.back()) && !maxima.empty()) maxima.pop_back();
  return maxima;
}

enum class ControlledEvidence { witness, certified_negative, unknown };
enum class SearchEvidence { witness, exhausted, unknown };

inline const char* to_string(ControlledEvidence e) {
  switch (e) {
    case ControlledEvidence::witness: return "witness";
    case ControlledEvidence::certified_negative: return "certified-negative";
    case ControlledEvidence::unknown: return "unknown";
  }
  return "unknown";
}

inline const char* to_string(SearchEvidence e) {
  switch (e) {
    case SearchEvidence::witness: return "witness";
    case SearchEvidence::exhausted: return "exhausted";
    case SearchEvidence::unknown: return "unknown";
  }
  return "unknown";
}

/// Evidence gathered for one sequence; absent entries were not computed.
struct HierarchyInputs {
  std::optional<ControlledEvidence> controlled;
  std::optional<SearchEvidence> concentration;
  std::optional<SearchEvidence> separation;
  std::optional<ConicalEvidence> conical;
};

struct HierarchyViolation {
  std::string upstream;
  std::string downstream;
  std::string detail;
};

struct HierarchyReport {
  /// Implications that had evidence on both ends.
  std::vector<std::string> checked;
  std::vector<HierarchyViolation> violations;

  bool empty() const { return checked.empty() && violations.empty(); }
  bool consistent() const { return violations.empty(); }
};

/// A positive result upstream with a negative result downstream contradicts
/// controlled => concentration => separation => conical.
inline HierarchyReport hierarchy_check(const HierarchyInputs& in) {
  struct Level {
    const char* name;
    std::optional<bool> positive;  // nullopt: no usable evidence
    std::string value;
  };
  auto controlled = [&]() -> Level {
    if (!in.controlled || *in.controlled == ControlledEvidence::unknown) return {"controlled", std::nullopt, ""};
    return {"controlled", *in.controlled == ControlledEvidence::witness, to_string(*in.controlled)};
  };
  auto search = [](const char* name, const std::optional<SearchEvidence>& e) -> Level {
    if (!e || *e == SearchEvidence::unknown) return {name, std::nullopt, ""};
    return {name, *e == SearchEvidence::witness, to_string(*e)};
  };
  auto conical = [&]() -> Level {
    if (!in.conical || *in.conical == ConicalEvidence::unknown) return {"conical", std::nullopt, ""};
    return {"conical", *in.conical == ConicalEvidence::bounded, to_string(*in.conical)};
  };
  std::vector<Level> levels{controlled(), search("concentration", in.concentration),
                            search("separation", in.separation), conical()};
  HierarchyReport report;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    for (std::size_t j = i + 1; j < levels.size(); ++j) {
      if (!levels[i].positive || !levels[j].positive) continue;
      report.checked.push_back(std::string(levels[i].name) + " => " + levels[j].name);
      if (*levels[i].positive && !*levels[j].positive)
        report.violations.push_back({levels[i].name, levels[j].name,
                                     std::string(levels[i].name) + " is " + levels[i].value + " but " +
                                         levels[j].name + " is " + levels[j].value});
    }
  }
  return report;
}

}  // namespace schottky
