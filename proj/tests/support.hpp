#pragma once

#include <random>
#include <vector>

#include "schottky/schottky.hpp"

namespace testing_support {

using namespace schottky;

inline GroupWord random_word(std::mt19937_64& rng, std::size_t length) {
  std::uniform_int_distribution<int> first(0, 3);
  std::uniform_int_distribution<int> next(0, 2);
  std::vector<Symbol> letters;
  letters.reserve(length);
  for (std::size_t i = 0; i < length; ++i) {
    if (letters.empty()) {
      letters.push_back(kSymbols[first(rng)]);
      continue;
    }
    // three letters are allowed after any letter; skip the inverse
    int pick = next(rng);
    Symbol forbidden = inverse(letters.back());
    for (Symbol s : kSymbols) {
      if (s == forbidden) continue;
      if (pick-- == 0) {
        letters.push_back(s);
        break;
      }
    }
  }
  return GroupWord(std::move(letters));
}

/// Random cyclically reduced period.
inline std::vector<Symbol> random_period(std::mt19937_64& rng, std::size_t length) {
  while (true) {
    GroupWord w = random_word(rng, length);
    if (!is_forbidden_pair(w[length - 1], w[0])) return w.letters();
  }
}

/// Mixture of periodic, thm42 and thm43 specs with random parameters.
inline FamilySpec random_family(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> kind(0, 2);
  std::uniform_int_distribution<std::uint64_t> coef(1, 3);
  std::uniform_int_distribution<std::uint64_t> off(0, 3);
  switch (kind(rng)) {
    case 0: {
      std::uniform_int_distribution<std::size_t> len(1, 6);
      std::vector<Term> terms;
      for (Symbol s : random_period(rng, len(rng))) terms.push_back({s, 1});
      return PeriodicFamily{terms};
    }
    case 1:
      return AlternatingRunsFamily{{coef(rng), off(rng)}, {coef(rng), off(rng)}};
    default:
      return GrowingRunsFamily{{coef(rng), off(rng)}};
  }
}

inline double angle_gap(double x, double y) {
  return BoundaryPoint<double>(x).distance_to(BoundaryPoint<double>(y));
}

}  // namespace testing_support
