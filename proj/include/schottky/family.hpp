#pragma once

// Sequence description language:
//
//   spec     = literal | family ;
//   literal  = term { term } ;
//   term     = symbol [ "^" integer ] ;         symbol in a A b B
//   family   = "periodic(" literal ")"
//            | "thm42(" rule "," rule ")"        b a^i1 b A^j1 b a^i2 b A^j2 ...
//            | "thm43(" rule ")" ;               b a^i1 b a^i2 b a^i3 ...
//   rule     = affine expression in k with nonnegative integer coefficients
//
// Run-length rules are evaluated at k = 1, 2, 3, ... and must be strictly
// increasing, i.e. have a positive coefficient of k.

#include <cctype>
#include <cstdint>
#include <limits>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "schottky/errors.hpp"
#include "schottky/sequence.hpp"
#include "schottky/word.hpp"

namespace schottky {

struct Term {
  Symbol symbol = Symbol::a;
  std::uint32_t exponent = 1;

  bool operator==(const Term&) const = default;
};

/// rule(k) = slope * k + offset.
struct AffineRule {
  std::uint64_t slope = 1;
  std::uint64_t offset = 0;

  std::uint64_t operator()(std::uint64_t k) const { return slope * k + offset; }
  bool strictly_increasing() const { return slope >= 1; }

  std::string to_string() const {
    std::string out;
    if (slope == 0) return std::to_string(offset);
    out = slope == 1 ? "k" : std::to_string(slope) + "k";
    if (offset > 0) out += "+" + std::to_string(offset);
    return out;
  }

  bool operator==(const AffineRule&) const = default;
};

struct LiteralFamily {
  std::vector<Term> terms;
  bool operator==(const LiteralFamily&) const = default;
};

struct PeriodicFamily {
  std::vector<Term> terms;
  bool operator==(const PeriodicFamily&) const = default;
};

/// b a^{i(1)} b A^{j(1)} b a^{i(2)} b A^{j(2)} ...  (keyword thm42)
struct AlternatingRunsFamily {
  AffineRule a_runs;
  AffineRule abar_runs;
  bool operator==(const AlternatingRunsFamily&) const = default;
};

/// b a^{i(1)} b a^{i(2)} b a^{i(3)} ...  (keyword thm43)
struct GrowingRunsFamily {
  AffineRule a_runs;
  bool operator==(const GrowingRunsFamily&) const = default;
};

using FamilySpec = std::variant<LiteralFamily, PeriodicFamily, AlternatingRunsFamily, GrowingRunsFamily>;

namespace detail {

inline constexpr std::uint64_t kMaxExponent = 1'000'000;
inline constexpr std::uint64_t kMaxCoefficient = 1'000'000;

inline std::vector<Symbol> expand_terms(const std::vector<Term>& terms) {
  std::vector<Symbol> out;
  for (const Term& t : terms) out.insert(out.end(), t.exponent, t.symbol);
  return out;
}

inline std::string render_terms(const std::vector<Term>& terms) {
  std::string out;
  for (const Term& t : terms) {
    out.push_back(to_char(t.symbol));
    if (t.exponent != 1) out += "^" + std::to_string(t.exponent);
  }
  return out;
}

class FamilyParser {
 public:
  explicit FamilyParser(std::string_view text) : text_(text) {}

  FamilySpec parse() {
    skip_space();
    if (at_end()) fail("empty sequence specification");
    FamilySpec spec;
    if (is_symbol(peek())) {
      spec = LiteralFamily{parse_terms()};
    } else {
      std::size_t start = pos_;
      std::string name = parse_identifier();
      skip_space();
      expect('(');
      if (name == "periodic") {
        spec = PeriodicFamily{parse_terms()};
      } else if (name == "thm42") {
        AffineRule first = parse_rule();
        skip_space();
        expect(',');
        AffineRule second = parse_rule();
        spec = AlternatingRunsFamily{first, second};
      } else if (name == "thm43") {
        spec = GrowingRunsFamily{parse_rule()};
      } else {
        fail("unknown family '" + name + "'", start);
      }
      skip_space();
      expect(')');
    }
    skip_space();
    if (!at_end()) fail("unexpected trailing input");
    return spec;
  }

 private:
  static bool is_symbol(char c) { return c == 'a' || c == 'A' || c == 'b' || c == 'B'; }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }
  [[noreturn]] void fail(const std::string& message, std::size_t position) const {
    throw ParseError(message, position);
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string parse_identifier() {
    std::string name;
    while (!at_end() && std::isalnum(static_cast<unsigned char>(peek()))) name.push_back(text_[pos_++]);
    if (name.empty()) fail("expected a symbol or a family name");
    return name;
  }

  std::uint64_t parse_integer(std::uint64_t limit) {
    std::size_t start = pos_;
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer");
    std::uint64_t value = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + static_cast<std::uint64_t>(text_[pos_++] - '0');
      if (value > limit) fail("integer exceeds " + std::to_string(limit), start);
    }
    return value;
  }

  std::vector<Term> parse_terms() {
    std::vector<Term> terms;
    skip_space();
    while (is_symbol(peek())) {
      Term term{symbol_from_char(text_[pos_++]), 1};
      skip_space();
      if (peek() == '^') {
        ++pos_;
        skip_space();
        std::size_t start = pos_;
        std::uint64_t exponent = parse_integer(kMaxExponent);
        if (exponent == 0) fail("exponent must be positive", start);
        term.exponent = static_cast<std::uint32_t>(exponent);
        skip_space();
      }
      terms.push_back(term);
    }
    if (terms.empty()) fail("expected a symbol");
    return terms;
  }

  // rule = part { "+" part } ; part = integer [ ["*"] "k" ] | "k"
  AffineRule parse_rule() {
    skip_space();
    std::size_t start = pos_;
    AffineRule rule{0, 0};
    while (true) {
      skip_space();
      if (peek() == 'k') {
        ++pos_;
        rule.slope += 1;
      } else {
        std::uint64_t value = parse_integer(kMaxCoefficient);
        skip_space();
        if (peek() == '*') {
          ++pos_;
          skip_space();
          if (peek() != 'k') fail("expected 'k' after '*'");
        }
        if (peek() == 'k') {
          ++pos_;
          rule.slope += value;
        } else {
          rule.offset += value;
        }
      }
      skip_space();
      if (peek() != '+') break;
      ++pos_;
    }
    if (rule.slope > kMaxCoefficient || rule.offset > kMaxCoefficient) fail("rule coefficient too large", start);
    if (!rule.strictly_increasing())
      fail("run-length rule '" + rule.to_string() + "' is not strictly increasing in k", start);
    return rule;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

/// Run-structured families: each block k is b r1^{rule1(k)} b r2^{rule2(k)} ...
struct RunPiece {
  Symbol run_symbol;
  AffineRule rule;
};

inline SymbolicSequence expand_runs(std::vector<RunPiece> pieces) {
  auto shared = std::make_shared<const std::vector<RunPiece>>(std::move(pieces));
  std::uint64_t slope_sum = 0;
  std::uint64_t constant_sum = 0;
  for (const auto& piece : *shared) {
    slope_sum += piece.rule.slope;
    constant_sum += 1 + piece.rule.offset;
  }
  // Total length of blocks 1..K.
  auto cumulative = [slope_sum, constant_sum](std::uint64_t blocks) {
    return blocks * constant_sum + slope_sum * blocks * (blocks + 1) / 2;
  };
  return SymbolicSequence(
      [shared, cumulative](std::size_t index) {
        std::uint64_t i = index;
        std::uint64_t low = 0;
        std::uint64_t high = 1;
        while (cumulative(high) <= i) high *= 2;
        // smallest block count K with cumulative(K) > i
        while (high - low > 1) {
          std::uint64_t mid = low + (high - low) / 2;
          if (cumulative(mid) <= i)
            low = mid;
          else
            high = mid;
        }
        std::uint64_t k = high;
        std::uint64_t offset = i - cumulative(k - 1);
        for (const auto& piece : *shared) {
          if (offset == 0) return Symbol::b;
          std::uint64_t run = piece.rule(k);
          if (offset <= run) return piece.run_symbol;
          offset -= run + 1;
        }
        return Symbol::b;  // unreachable
      },
      std::nullopt);
}

}  // namespace detail

inline FamilySpec parse_family(std::string_view text) {
  FamilySpec spec = detail::FamilyParser(text).parse();
  // Reducedness of the expansion; run families are reduced by construction.
  if (const auto* literal = std::get_if<LiteralFamily>(&spec)) {
    require_reduced(detail::expand_terms(literal->terms));
  } else if (const auto* periodic = std::get_if<PeriodicFamily>(&spec)) {
    auto symbols = detail::expand_terms(periodic->terms);
    require_reduced(symbols);
    if (is_forbidden_pair(symbols.back(), symbols.front()))
      throw InvalidArgument("non-reduced expansion: forbidden pair " +
                            std::string{to_char(symbols.back()), to_char(symbols.front())} + " at index " +
                            std::to_string(symbols.size()));
  }
  return spec;
}

/// Canonical text; parse_family(render_family(s)) == s.
inline std::string render_family(const FamilySpec& spec) {
  struct Renderer {
    std::string operator()(const LiteralFamily& f) const { return detail::render_terms(f.terms); }
    std::string operator()(const PeriodicFamily& f) const { return "periodic(" + detail::render_terms(f.terms) + ")"; }
    std::string operator()(const AlternatingRunsFamily& f) const {
      return "thm42(" + f.a_runs.to_string() + "," + f.abar_runs.to_string() + ")";
    }
    std::string operator()(const GrowingRunsFamily& f) const { return "thm43(" + f.a_runs.to_string() + ")"; }
  };
  return std::visit(Renderer{}, spec);
}

inline SymbolicSequence expand(const FamilySpec& spec) {
  struct Expander {
    SymbolicSequence operator()(const LiteralFamily& f) const {
      return SymbolicSequence::from_word(GroupWord(detail::expand_terms(f.terms)));
    }
    SymbolicSequence operator()(const PeriodicFamily& f) const {
      return SymbolicSequence::periodic(detail::expand_terms(f.terms));
    }
    SymbolicSequence operator()(const AlternatingRunsFamily& f) const {
      return detail::expand_runs({{Symbol::a, f.a_runs}, {Symbol::A, f.abar_runs}});
    }
    SymbolicSequence operator()(const GrowingRunsFamily& f) const {
      return detail::expand_runs({{Symbol::a, f.a_runs}});
    }
  };
  return std::visit(Expander{}, spec);
}

inline SymbolicSequence parse_sequence(std::string_view text) { return expand(parse_family(text)); }

}  // namespace schottky
