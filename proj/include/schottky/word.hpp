#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "schottky/errors.hpp"

namespace schottky {

/// Generator letters. `A` and `B` stand for the inverses a-bar and b-bar;
/// the enumerator order is the lexicographic order used everywhere.
enum class Symbol : std::uint8_t { a = 0, A = 1, b = 2, B = 3 };

inline constexpr std::array<Symbol, 4> kSymbols{Symbol::a, Symbol::A, Symbol::b, Symbol::B};

constexpr int index(Symbol s) { return static_cast<int>(s); }

constexpr Symbol inverse(Symbol s) {
  switch (s) {
    case Symbol::a: return Symbol::A;
    case Symbol::A: return Symbol::a;
    case Symbol::b: return Symbol::B;
    case Symbol::B: return Symbol::b;
  }
  return s;
}

/// a and a-bar both label translates of the geodesic a.
constexpr bool is_a_type(Symbol s) { return s == Symbol::a || s == Symbol::A; }

constexpr bool is_forbidden_pair(Symbol first, Symbol second) { return second == inverse(first); }

constexpr char to_char(Symbol s) { return "aAbB"[index(s)]; }

inline Symbol symbol_from_char(char c) {
  switch (c) {
    case 'a': return Symbol::a;
    case 'A': return Symbol::A;
    case 'b': return Symbol::b;
    case 'B': return Symbol::B;
    default: throw InvalidArgument(std::string("unknown symbol '") + c + "'");
  }
}

/// Throws InvalidArgument naming the first index i with symbols[i-1] symbols[i]
/// a forbidden pair.
inline void require_reduced(const std::vector<Symbol>& symbols) {
  for (std::size_t i = 1; i < symbols.size(); ++i)
    if (is_forbidden_pair(symbols[i - 1], symbols[i]))
      throw InvalidArgument("non-reduced word: forbidden pair " + std::string{to_char(symbols[i - 1]), to_char(symbols[i])} +
                            " at index " + std::to_string(i));
}

/// Reduced word in the free generators; the element it names is the
/// left-to-right product of generator maps.
class GroupWord {
 public:
  GroupWord() = default;
  explicit GroupWord(std::vector<Symbol> letters) : letters_(std::move(letters)) { require_reduced(letters_); }

  /// Parses the ASCII form, e.g. "abA"; "" is the identity.
  static GroupWord parse(std::string_view text) {
    std::vector<Symbol> letters;
    letters.reserve(text.size());
    for (char c : text) letters.push_back(symbol_from_char(c));
    return GroupWord(std::move(letters));
  }

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Symbol operator[](std::size_t i) const { return letters_[i]; }
  const std::vector<Symbol>& letters() const { return letters_; }

  GroupWord prefix(std::size_t n) const {
    return GroupWord(std::vector<Symbol>(letters_.begin(), letters_.begin() + static_cast<std::ptrdiff_t>(n)));
  }

  GroupWord inverse() const {
    std::vector<Symbol> out(letters_.rbegin(), letters_.rend());
    for (auto& s : out) s = schottky::inverse(s);
    return GroupWord(std::move(out));
  }

  /// Free reduction of the concatenation.
  GroupWord operator*(const GroupWord& other) const {
    std::vector<Symbol> out = letters_;
    for (Symbol s : other.letters_) {
      if (!out.empty() && is_forbidden_pair(out.back(), s))
        out.pop_back();
      else
        out.push_back(s);
    }
    return GroupWord(std::move(out));
  }

  std::string to_string() const {
    std::string out;
    out.reserve(letters_.size());
    for (Symbol s : letters_) out.push_back(to_char(s));
    return out;
  }

  bool operator==(const GroupWord&) const = default;

  /// Length first, then lexicographic in the order a < A < b < B.
  std::strong_ordering operator<=>(const GroupWord& other) const {
    if (auto cmp = letters_.size() <=> other.letters_.size(); cmp != 0) return cmp;
    for (std::size_t i = 0; i < letters_.size(); ++i)
      if (auto cmp = index(letters_[i]) <=> index(other.letters_[i]); cmp != 0) return cmp;
    return std::strong_ordering::equal;
  }

 private:
  std::vector<Symbol> letters_;
};

/// Visits every reduced word of length 1..max_length exactly once, in
/// length-then-lexicographic order.
inline void for_each_reduced_word(std::size_t max_length, const std::function<void(const GroupWord&)>& visit) {
  std::vector<Symbol> current;
  std::function<void(std::size_t)> extend = [&](std::size_t remaining) {
    if (remaining == 0) {
      visit(GroupWord(current));
      return;
    }
    for (Symbol s : kSymbols) {
      if (!current.empty() && is_forbidden_pair(current.back(), s)) continue;
      current.push_back(s);
      extend(remaining - 1);
      current.pop_back();
    }
  };
  for (std::size_t length = 1; length <= max_length; ++length) extend(length);
}

inline std::vector<GroupWord> enumerate_words(std::size_t max_length) {
  if (max_length < 1) throw InvalidArgument("maxLen must be at least 1");
  std::vector<GroupWord> words;
  for_each_reduced_word(max_length, [&](const GroupWord& w) { words.push_back(w); });
  return words;
}

/// Number of reduced words of exactly length L: 4 * 3^(L-1).
constexpr std::uint64_t reduced_word_count(std::size_t length) {
  if (length == 0) return 1;
  std::uint64_t count = 4;
  for (std::size_t i = 1; i < length; ++i) count *= 3;
  return count;
}

}  // namespace schottky
