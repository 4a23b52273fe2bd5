// Shared input generators for the property tests.
#pragma once

#include <algorithm>
#include <functional>
#include <random>

#include "cardnet/network.hpp"
#include "cardnet/verification.hpp"

namespace cardnet::testgen {

inline Value draw(std::mt19937_64& rng, Value max_value) {
  return static_cast<Value>(rng() % (static_cast<std::uint64_t>(max_value) + 1));
}

inline ValueSeq random_seq(std::mt19937_64& rng, int len, Value max_value) {
  ValueSeq s(static_cast<std::size_t>(len));
  for (Value& v : s) v = draw(rng, max_value);
  return s;
}

inline ValueSeq random_sorted_desc(std::mt19937_64& rng, int len, Value max_value) {
  ValueSeq s = random_seq(rng, len, max_value);
  std::sort(s.begin(), s.end(), std::greater<>());
  return s;
}

// Nondecreasing-then-nonincreasing values under a random circular shift.
inline ValueSeq random_bitonic(std::mt19937_64& rng, int len, Value max_value) {
  ValueSeq s = random_seq(rng, len, max_value);
  const int peak = static_cast<int>(rng() % static_cast<std::uint64_t>(len + 1));
  std::sort(s.begin(), s.begin() + peak);
  std::sort(s.begin() + peak, s.end(), std::greater<>());
  const auto shift = rng() % static_cast<std::uint64_t>(len);
  std::rotate(s.begin(), s.begin() + static_cast<long>(shift), s.end());
  return s;
}

// V-shaped s-dominating sequences of even length k. Mixes three sources:
// the bitonic-splitter image of a valid merger window (the shape the merger
// actually sees), plain nonincreasing sequences, and rejection-sampled
// v-shapes, so coverage does not hinge on one construction.
inline ValueSeq random_vshape_sdom(std::mt19937_64& rng, int k, Value max_value) {
  const auto pick = rng() % 4;
  if (pick == 0) return random_sorted_desc(rng, k, max_value);
  if (pick == 1) {
    for (;;) {
      ValueSeq s = random_seq(rng, k, max_value);
      const int valley = static_cast<int>(rng() % static_cast<std::uint64_t>(k + 1));
      std::sort(s.begin(), s.begin() + valley, std::greater<>());
      std::sort(s.begin() + valley, s.end());
      if (is_vshaped(s) && is_sdominating(s)) return s;
    }
  }
  const MergerInput input = random_merger_input(rng, k, max_value);
  ValueSeq window = input.window();
  // Apply the merger's front bitonic splitter by hand: (k/2+v, 3k/2+1-v).
  for (int v = 1; v <= k / 2; ++v) {
    Value& a = window[static_cast<std::size_t>(k / 2 + v) - 1];
    Value& b = window[static_cast<std::size_t>(3 * k / 2 - v)];
    if (a < b) std::swap(a, b);
  }
  window.resize(static_cast<std::size_t>(k));
  return window;
}

}  // namespace cardnet::testgen
