#include <gtest/gtest.h>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "support.hpp"

using namespace schottky;
using quad = boost::multiprecision::cpp_bin_float_quad;

namespace {

const Group& group() {
  static const Group g;
  return g;
}

}  // namespace

TEST(CheckControlled, PeriodicRecurs) {
  auto s = parse_sequence("periodic(ab)");
  for (std::size_t n = 1; n <= 3; ++n) {
    auto verdicts = check_controlled(s, n, 10, 200);
    ASSERT_EQ(verdicts.size(), 10u);
    for (const auto& v : verdicts) {
      ASSERT_TRUE(v.recurs());
      EXPECT_EQ(v.positions().front(), n + 2);
      for (std::size_t i = 1; i < v.positions().size(); ++i) EXPECT_EQ(v.positions()[i] - v.positions()[i - 1], 2u);
      EXPECT_GT(v.positions().back() + v.window() + 2, 200u);
    }
  }
}

TEST(CheckControlled, ArithmeticProgressionMatchesPeriod) {
  for (const char* text : {"periodic(aab)", "periodic(abAB)", "periodic(a^3 b^2 A B)"}) {
    auto s = parse_sequence(text);
    std::size_t period = 1;
    while (period < 50) {
      bool ok = true;
      for (std::size_t i = 0; i < 100 && ok; ++i) ok = s[i] == s[i + period];
      if (ok) break;
      ++period;
    }
    for (const auto& v : check_controlled(s, 2, 8, 120)) {
      ASSERT_TRUE(v.recurs()) << text;
      // a window spanning a full period pins the phase
      if (v.window() < period) continue;
      for (std::size_t i = 0; i < v.positions().size(); ++i) EXPECT_EQ(v.positions()[i], 2 + (i + 1) * period) << text;
    }
  }
}

TEST(CheckControlled, RunFamiliesDoNotRecur) {
  for (const char* text : {"thm42(k,k)", "thm42(k,k+1)", "thm43(k)"}) {
    auto s = parse_sequence(text);
    // "b a b" is x_1 x_2 x_3
    auto verdict = scan_recurrence(s, 1, 2, 2000);
    EXPECT_FALSE(verdict.recurs()) << text;
    // the window inside the run does recur
    EXPECT_TRUE(scan_recurrence(s, 1, 1, 2000).recurs()) << text;
  }
}

TEST(CheckControlled, Preconditions) {
  auto s = parse_sequence("periodic(ab)");
  EXPECT_THROW(check_controlled(s, 5, 10, 15), InvalidArgument);
  EXPECT_THROW(check_controlled(s, 0, 1, 15), InvalidArgument);
  EXPECT_THROW(check_controlled(parse_sequence("b a b"), 1, 1, 10), NeedsMorePrefix);
}

TEST(RecurrenceVerdict, ReverifiesPositions) {
  std::vector<Symbol> x = GroupWord::parse("abababa").letters();
  EXPECT_NO_THROW(RecurrenceVerdict(x, 1, 2, 7, {3, 5}));
  EXPECT_THROW(RecurrenceVerdict(x, 1, 2, 7, {4}), ToleranceError);
  EXPECT_THROW(RecurrenceVerdict(x, 1, 2, 7, {6}), ToleranceError);
}

TEST(CheckControlled, VerdictsMonotoneInDepth) {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 30; ++i) {
    auto s = expand(testing_support::random_family(rng));
    auto shallow = check_controlled(s, 3, 6, 60);
    auto deep = check_controlled(s, 3, 6, 400);
    for (std::size_t k = 0; k < shallow.size(); ++k) {
      if (!shallow[k].recurs()) continue;
      ASSERT_TRUE(deep[k].recurs());
      const auto& a = shallow[k].positions();
      const auto& b = deep[k].positions();
      EXPECT_TRUE(std::equal(a.begin(), a.end(), b.begin()));
    }
  }
}

TEST(Certificate, Examples) {
  auto thm43 = certify_family_nonrecurrence(parse_family("thm43(k)"));
  ASSERT_TRUE(thm43);
  EXPECT_EQ(thm43->block.to_string(), "bab");
  EXPECT_EQ(thm43->window, 2u);
  auto thm42 = certify_family_nonrecurrence(parse_family("thm42(2k,2k+1)"));
  ASSERT_TRUE(thm42);
  EXPECT_EQ(thm42->block.to_string(), "baab");
  EXPECT_FALSE(certify_family_nonrecurrence(parse_family("periodic(ab)")));
  EXPECT_FALSE(certify_family_nonrecurrence(parse_family("b a b")));
}

TEST(Certificate, ReverifiesToDepth) {
  for (const char* text : {"thm43(k)", "thm42(2k,2k+1)", "thm42(k,k+1)", "thm43(3k+2)", "thm42(k+4,2k)"}) {
    FamilySpec spec = parse_family(text);
    auto cert = certify_family_nonrecurrence(spec);
    ASSERT_TRUE(cert) << text;
    auto s = expand(spec);
    EXPECT_EQ(GroupWord(s.prefix(cert->window + 1)), cert->block);
    EXPECT_FALSE(scan_recurrence(s, cert->block_start, cert->window, 10000).recurs()) << text;
  }
}

TEST(ConicalProbe, PeriodicBounded) {
  auto probe = conical_probe(group(), parse_sequence("periodic(ab)"), 500);
  ASSERT_EQ(probe.distances.size(), 500u);
  double largest = *std::max_element(probe.distances.begin(), probe.distances.end());
  EXPECT_LT(largest, 5.0);
  EXPECT_EQ(probe.evidence, ConicalEvidence::bounded);
  for (double d : probe.distances) EXPECT_GE(d, 0.0);
}

TEST(ConicalProbe, AxisThroughOrigin) {
  auto probe = conical_probe(group(), parse_sequence("periodic(a)"), 100);
  for (double d : probe.distances) EXPECT_LT(d, 1e-8);
}

TEST(ConicalProbe, GrowingRunsReturn) {
  auto s = parse_sequence("thm43(k)");
  // blocks 1..30 occupy sum (k + 1) = 495 symbols
  auto probe = conical_probe(group(), s, 500);
  EXPECT_LT(probe.last_quartile_minimum, 5.0);
  EXPECT_EQ(probe.evidence, ConicalEvidence::bounded);
  auto x = s.prefix(500);
  // the distance drops again at every b crossing
  for (std::size_t n = 1; n < x.size(); ++n) {
    if (x[n - 1] == Symbol::b) {
      EXPECT_LT(probe.distances[n - 1], 5.0);
    }
  }
  auto maxima = run_maxima(s, probe);
  EXPECT_EQ(maxima.size(), 30u);
}

TEST(ConicalProbe, TailMinimum) {
  auto probe = detail::summarize_probe({3, 1, 4, 1.5, 9, 2, 6, 5}, 2.5);
  std::vector<double> expected{1, 1, 1.5, 1.5, 2, 2, 5, 5};
  EXPECT_EQ(probe.tail_minimum, expected);
  EXPECT_EQ(probe.last_quartile_minimum, 5);
  EXPECT_EQ(probe.evidence, ConicalEvidence::unbounded);
  EXPECT_THROW(conical_probe(group(), parse_sequence("periodic(a)"), 1), InvalidArgument);
}

TEST(ConicalProbe, ShiftInvariance) {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 10; ++i) {
    auto s = expand(testing_support::random_family(rng));
    auto p = decode(group(), s, 1e-12).point;
    auto d = orbit_distances(group(), s, p.antipode(), 60);
    auto back = group().inverse_generator(s[0]).apply(p.antipode());
    auto shifted = orbit_distances(group(), shift(s), back, 59);
    for (std::size_t n = 0; n < shifted.size(); ++n) EXPECT_NEAR(shifted[n], d[n + 1], 1e-8);
  }
}

TEST(ConicalProbe, DirectOracleInQuad) {
  SchottkyGroup<quad> g(quad(0.8));
  DecodeOptions options;
  options.epsilon = 1e-30;
  for (const char* text : {"thm43(k)", "periodic(ab)", "thm42(k,k+1)"}) {
    auto s = parse_sequence(text);
    auto p = decode(g, s, options).point;
    Geodesic<quad> ray_line(p.antipode(), p);
    auto probe = conical_probe(group(), s, 25);
    MoebiusMap<quad> w;
    for (std::size_t n = 1; n <= 25; ++n) {
      w = w * g.generator(s[n - 1]);
      Complex<quad> orbit_point = w.apply(Complex<quad>(0));
      double direct = static_cast<double>(distance_point_to_geodesic(orbit_point, ray_line));
      EXPECT_NEAR(probe.distances[n - 1], direct, 1e-6) << text << " n = " << n;
    }
  }
}

TEST(Hierarchy, Examples) {
  HierarchyInputs periodic{ControlledEvidence::witness, SearchEvidence::witness, SearchEvidence::witness,
                           ConicalEvidence::bounded};
  auto report = hierarchy_check(periodic);
  EXPECT_TRUE(report.consistent());
  EXPECT_EQ(report.checked.size(), 6u);

  HierarchyInputs thm43{ControlledEvidence::certified_negative, SearchEvidence::exhausted, SearchEvidence::witness,
                        ConicalEvidence::bounded};
  EXPECT_TRUE(hierarchy_check(thm43).consistent());

  HierarchyInputs broken{ControlledEvidence::witness, SearchEvidence::exhausted, std::nullopt, std::nullopt};
  auto bad = hierarchy_check(broken);
  ASSERT_EQ(bad.violations.size(), 1u);
  EXPECT_EQ(bad.violations[0].upstream, "controlled");
  EXPECT_EQ(bad.violations[0].downstream, "concentration");

  HierarchyInputs skip{ControlledEvidence::witness, std::nullopt, std::nullopt, ConicalEvidence::unbounded};
  EXPECT_FALSE(hierarchy_check(skip).consistent());
}

TEST(Hierarchy, EmptyInputs) {
  auto report = hierarchy_check({});
  EXPECT_TRUE(report.empty());
  EXPECT_TRUE(report.consistent());
  HierarchyInputs unknowns{ControlledEvidence::unknown, SearchEvidence::unknown, SearchEvidence::unknown,
                           ConicalEvidence::unknown};
  EXPECT_TRUE(hierarchy_check(unknowns).empty());
}
