#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ringzeta/numeric.hpp"

namespace testing {

/// Fixed-seed generator so every randomized suite is reproducible.
inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline std::int64_t uniform(std::mt19937_64& g, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(g);
}

inline std::vector<ringzeta::Integer> ints(std::initializer_list<long> xs) {
  std::vector<ringzeta::Integer> v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

}  // namespace testing
