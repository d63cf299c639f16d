#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "schottky/errors.hpp"
#include "schottky/word.hpp"

namespace schottky {

/// Crossing sequence x1 x2 x3 ... given by a pure function of the (0-based)
/// index, optionally of known finite length. Cheap to copy; shifting shares
/// the underlying generator.
class SymbolicSequence {
 public:
  using Generator = std::function<Symbol(std::size_t)>;

  /// The generator must produce a reduced sequence; prefix() re-checks.
  SymbolicSequence(Generator generator, std::optional<std::size_t> length)
      : generator_(std::make_shared<Generator>(std::move(generator))), length_(length) {}

  static SymbolicSequence from_word(const GroupWord& word) {
    auto letters = std::make_shared<std::vector<Symbol>>(word.letters());
    return SymbolicSequence([letters](std::size_t i) { return (*letters)[i]; }, letters->size());
  }

  /// Infinite repetition of `period`, which must be cyclically reduced.
  static SymbolicSequence periodic(const std::vector<Symbol>& period) {
    if (period.empty()) throw InvalidArgument("periodic sequence needs a nonempty period");
    require_reduced(period);
    if (is_forbidden_pair(period.back(), period.front()))
      throw InvalidArgument("non-reduced periodic sequence: forbidden pair across the period boundary at index " +
                            std::to_string(period.size()));
    auto letters = std::make_shared<std::vector<Symbol>>(period);
    return SymbolicSequence([letters](std::size_t i) { return (*letters)[i % letters->size()]; }, std::nullopt);
  }

  /// The word followed by its last letter repeated forever.
  static SymbolicSequence with_constant_tail(const GroupWord& word) {
    if (word.empty()) throw InvalidArgument("word must be nonempty");
    auto letters = std::make_shared<std::vector<Symbol>>(word.letters());
    return SymbolicSequence(
        [letters](std::size_t i) { return i < letters->size() ? (*letters)[i] : letters->back(); }, std::nullopt);
  }

  bool is_finite() const { return length_.has_value(); }
  std::optional<std::size_t> length() const { return length_; }
  bool has_index(std::size_t i) const { return !length_ || i < *length_; }

  Symbol operator[](std::size_t i) const {
    if (!has_index(i)) throw NeedsMorePrefix(*length_, 0.0);
    return (*generator_)(offset_ + i);
  }

  /// First n symbols; throws if the sequence is shorter or not reduced.
  std::vector<Symbol> prefix(std::size_t n) const {
    if (length_ && n > *length_) throw NeedsMorePrefix(*length_, 0.0);
    std::vector<Symbol> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      out.push_back((*generator_)(offset_ + i));
      if (i > 0 && is_forbidden_pair(out[i - 1], out[i]))
        throw InvalidArgument("sequence is not reduced at index " + std::to_string(i));
    }
    return out;
  }

  GroupWord prefix_word(std::size_t n) const { return GroupWord(prefix(n)); }

  /// sigma^m: index n of the result is index n + m of this sequence.
  SymbolicSequence shifted(std::size_t m = 1) const {
    if (length_ && m > *length_) throw InvalidArgument("cannot shift past the end of a finite sequence");
    SymbolicSequence out = *this;
    out.offset_ += m;
    if (out.length_) *out.length_ -= m;
    return out;
  }

 private:
  std::shared_ptr<const Generator> generator_;
  std::optional<std::size_t> length_;
  std::size_t offset_ = 0;
};

inline SymbolicSequence shift(const SymbolicSequence& s) {
  if (s.length() && *s.length() == 0) throw InvalidArgument("cannot shift an empty sequence");
  return s.shifted(1);
}

}  // namespace schottky
