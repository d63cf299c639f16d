#pragma once

// End-to-end classification of one sequence: decode the limit point, gather
// recurrence evidence, run the witness searches on the sequence's own
// neighbourhoods, probe conicality and cross-check the implication chain.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "schottky/classify.hpp"
#include "schottky/coding.hpp"
#include "schottky/concentration.hpp"
#include "schottky/family.hpp"
#include "schottky/group.hpp"

namespace schottky {

struct ClassifyOptions {
  std::size_t depth = 500;
  std::size_t max_len = 12;
  std::size_t max_window = 10;
  /// Window of the constructive chain search.
  std::size_t chain_window = 4;
  double epsilon = kDefaultEpsilon;
  double conical_threshold = kConicalThreshold;
  unsigned threads = 1;
};

struct ClassifyResult {
  std::string spec;
  BoundaryPoint<double> p;
  std::size_t decode_depth = 0;

  std::vector<RecurrenceVerdict> recurrence;
  std::optional<NonRecurrenceCertificate> certificate;
  /// Scan of the certified block to the probe depth.
  std::optional<RecurrenceVerdict> certificate_scan;
  WitnessReport chain;
  ControlledEvidence controlled = ControlledEvidence::unknown;

  /// The two crossed translates of the first recurring letter, joined by
  /// the bridge geodesic; U is the arc it cuts off, V = U_j.
  std::size_t bridge_from = 0;
  std::size_t bridge_to = 0;
  std::optional<Bridge> bridge;
  std::optional<Arc<double>> target;
  std::optional<WitnessReport> concentration;
  std::optional<WitnessReport> separation;

  std::optional<ConicalProbe> conical;
  std::size_t conical_depth = 0;

  HierarchyReport hierarchy;

  HierarchyInputs evidence() const {
    HierarchyInputs in;
    in.controlled = controlled;
    in.concentration = concentration ? (concentration->found() ? SearchEvidence::witness : SearchEvidence::exhausted)
                                     : SearchEvidence::unknown;
    in.separation = separation ? (separation->found() ? SearchEvidence::witness : SearchEvidence::exhausted)
                               : SearchEvidence::unknown;
    in.conical = conical ? conical->evidence : ConicalEvidence::unknown;
    return in;
  }
};

namespace detail {

/// Largest n <= limit whose shifted tail still decodes (finite sequences run
/// out of symbols near the end).
inline std::size_t decodable_depth(const Group& group, const SymbolicSequence& s, std::size_t limit) {
  if (!s.is_finite()) return limit;
  std::size_t n = std::min(limit, *s.length());
  while (n > 0) {
    try {
      decode(group, s.shifted(n), 1e-12);
      return n;
    } catch (const NeedsMorePrefix&) {
      --n;
    }
  }
  return 0;
}

/// First j > 1 with x_j = x_1 within the available prefix.
inline std::optional<std::size_t> next_recurrence_of_first(const SymbolicSequence& s, std::size_t limit) {
  for (std::size_t j = 2; j <= limit; ++j) {
    if (!s.has_index(j - 1)) return std::nullopt;
    if (s[j - 1] == s[0]) return j;
  }
  return std::nullopt;
}

}  // namespace detail

inline ClassifyResult classify_sequence(const Group& group, const FamilySpec& spec, const ClassifyOptions& options) {
  ClassifyResult result;
  result.spec = render_family(spec);
  SymbolicSequence s = expand(spec);
  DecodeResult<double> decoded = decode(group, s, options.epsilon);
  result.decode_depth = decoded.depth;
  // The searches need p well inside the tiny arcs they test.
  result.p = decode(group, s, 1e-13).point;
  SearchOptions search;
  search.threads = options.threads;

  std::size_t available = s.is_finite() ? std::min(options.depth, *s.length()) : options.depth;

  // Controlled concentration: certificate, recurrence scan and chain search.
  if (available > 1 + options.max_window)
    result.recurrence = check_controlled(s, 1, options.max_window, available);
  result.certificate = certify_family_nonrecurrence(spec);
  if (result.certificate && available > 1 + result.certificate->window)
    result.certificate_scan = scan_recurrence(s, result.certificate->block_start, result.certificate->window, available);
  result.chain = search_controlled_chain(group, s, options.chain_window, options.chain_window + 1, available);
  if (result.certificate)
    result.controlled = ControlledEvidence::certified_negative;
  else if (result.chain.verified())
    result.controlled = ControlledEvidence::witness;

  // Concentration and separation on the bridge between lambda_1 and the
  // next translate of the same letter.
  if (auto j = detail::next_recurrence_of_first(s, available)) {
    result.bridge_from = 1;
    result.bridge_to = *j;
    result.bridge = bridge(group, s, 1, *j);
    result.target = cylinder_arc(group, s, *j);
    ConcentrationTask task(result.p, result.bridge->u, *result.target, false, options.max_len);
    result.concentration = search_concentration(group, task, search);
    result.separation =
        search_separation(group, result.p, result.bridge->lambda, *result.target, options.max_len, std::nullopt, search);
  }

  result.conical_depth = detail::decodable_depth(group, s, options.depth);
  if (result.conical_depth >= 2) {
    ConicalProbe probe = detail::summarize_probe(
        orbit_distances(group, s, result.p.antipode(), result.conical_depth), options.conical_threshold);
    result.conical = std::move(probe);
  }

  result.hierarchy = hierarchy_check(result.evidence());
  return result;
}

}  // namespace schottky
