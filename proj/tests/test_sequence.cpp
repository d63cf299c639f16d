#include <gtest/gtest.h>

#include "support.hpp"

using namespace schottky;

namespace {

std::string head(const SymbolicSequence& s, std::size_t n) { return GroupWord(s.prefix(n)).to_string(); }

// Direct construction of the run families, written out block by block.
std::string alternating_runs(const AffineRule& first, const AffineRule& second, std::size_t length) {
  std::string out;
  for (std::uint64_t k = 1; out.size() < length; ++k) {
    out += 'b' + std::string(first(k), 'a');
    out += 'b' + std::string(second(k), 'A');
  }
  return out.substr(0, length);
}

std::string growing_runs(const AffineRule& rule, std::size_t length) {
  std::string out;
  for (std::uint64_t k = 1; out.size() < length; ++k) out += 'b' + std::string(rule(k), 'a');
  return out.substr(0, length);
}

std::size_t parse_error_position(const std::string& text) {
  try {
    parse_family(text);
  } catch (const ParseError& e) {
    return e.position();
  }
  ADD_FAILURE() << "no parse error for " << text;
  return std::string::npos;
}

}  // namespace

TEST(ParseFamily, Periodic) {
  auto s = parse_sequence("periodic(ab)");
  EXPECT_FALSE(s.is_finite());
  EXPECT_EQ(head(s, 8), "abababab");
  EXPECT_EQ(head(parse_sequence("periodic(a^2 B)"), 7), "aaBaaBa");
}

TEST(ParseFamily, GrowingRuns) {
  EXPECT_EQ(head(parse_sequence("thm43(k)"), 12), "babaabaaabaa");
  EXPECT_EQ(head(parse_sequence("thm43(2k+1)"), 40), growing_runs({2, 1}, 40));
}

TEST(ParseFamily, AlternatingRuns) {
  EXPECT_EQ(head(parse_sequence("thm42(2k, 2k+1)"), 20), "baabAAAbaaaabAAAAAba");
  EXPECT_EQ(head(parse_sequence("thm42(k,k+1)"), 300), alternating_runs({1, 0}, {1, 1}, 300));
  EXPECT_EQ(head(parse_sequence("thm42(3*k+2, 5k)"), 500), alternating_runs({3, 2}, {5, 0}, 500));
}

TEST(ParseFamily, Literal) {
  auto s = parse_sequence("b a^3 b A");
  ASSERT_TRUE(s.is_finite());
  EXPECT_EQ(*s.length(), 6u);
  EXPECT_EQ(head(s, 6), "baaabA");
  EXPECT_THROW(s.prefix(7), NeedsMorePrefix);
}

TEST(ParseFamily, RejectsNonReduced) {
  try {
    parse_family("a A");
    FAIL();
  } catch (const InvalidArgument& e) {
    EXPECT_NE(std::string(e.what()).find("index 1"), std::string::npos);
  }
  EXPECT_THROW(parse_family("periodic(abA)"), InvalidArgument);
  EXPECT_THROW(parse_family("b a^4 A"), InvalidArgument);
}

TEST(ParseFamily, SyntaxErrorsCarryPositions) {
  EXPECT_EQ(parse_error_position(""), 0u);
  EXPECT_EQ(parse_error_position("periodic(ab"), 11u);
  EXPECT_EQ(parse_error_position("thm44(k)"), 0u);
  EXPECT_EQ(parse_error_position("a^0"), 2u);
  EXPECT_EQ(parse_error_position("ab c"), 3u);
  EXPECT_EQ(parse_error_position("thm43(3)"), 6u);
  EXPECT_EQ(parse_error_position("thm42(k)"), 7u);
}

TEST(ParseFamily, RoundTrip) {
  for (const char* text : {"periodic(ab)", "thm43(k)", "thm42(2k,2k+1)", "b a^3 b A", "thm42(k+1, 3k)",
                           "periodic(a^2 b^3 A B)", "thm43( 2 * k + 5 )"}) {
    FamilySpec spec = parse_family(text);
    std::string canonical = render_family(spec);
    EXPECT_EQ(parse_family(canonical), spec) << text;
    EXPECT_EQ(render_family(parse_family(canonical)), canonical);
  }
  std::mt19937_64 rng(17);
  for (int i = 0; i < 200; ++i) {
    FamilySpec spec = testing_support::random_family(rng);
    EXPECT_EQ(parse_family(render_family(spec)), spec);
  }
}

TEST(ParseFamily, ExpansionsStayReduced) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 20; ++i) {
    FamilySpec spec = testing_support::random_family(rng);
    EXPECT_NO_THROW(expand(spec).prefix(10000)) << render_family(spec);
  }
  EXPECT_NO_THROW(parse_sequence("thm42(k,k+1)").prefix(10000));
  EXPECT_NO_THROW(parse_sequence("thm43(k)").prefix(10000));
}

TEST(Shift, Examples) {
  auto s = parse_sequence("thm43(k)");
  EXPECT_EQ(head(shift(s), 5), "abaab");
  EXPECT_THROW(parse_sequence("periodic(abB)"), InvalidArgument);
}

TEST(Shift, PeriodicStaysPeriodic) {
  auto p = parse_sequence("periodic(aab)");
  auto q = shift(p);
  for (std::size_t i = 0; i < 30; ++i) {
    EXPECT_EQ(q[i], p[i + 1]);
    EXPECT_EQ(q[i], q[i + 3]);
  }
}

TEST(Shift, FiniteSequences) {
  auto s = SymbolicSequence::from_word(GroupWord::parse("ab"));
  auto t = shift(shift(s));
  EXPECT_EQ(*t.length(), 0u);
  EXPECT_THROW(shift(t), InvalidArgument);
}

TEST(SymbolicSequence, ConstantTail) {
  auto s = SymbolicSequence::with_constant_tail(GroupWord::parse("bA"));
  EXPECT_EQ(head(s, 6), "bAAAAA");
  EXPECT_THROW(SymbolicSequence::periodic({Symbol::a, Symbol::A}), InvalidArgument);
}
