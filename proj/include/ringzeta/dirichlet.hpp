#pragma once

#include <cstdint>
#include <vector>

#include "ringzeta/numeric.hpp"

namespace ringzeta {

/// Coefficients a_{p^0}, ..., a_{p^K} of one Euler factor.
struct LocalDirichletTruncation {
  std::int64_t prime = 0;
  std::vector<Integer> coefficients;

  int depth() const { return static_cast<int>(coefficients.size()) - 1; }
  bool operator==(const LocalDirichletTruncation&) const = default;
};

/// Coefficients a_1, ..., a_M of a global Dirichlet series; index 0 is unused.
struct GlobalDirichletTruncation {
  std::vector<Integer> coefficients;

  std::int64_t bound() const { return static_cast<std::int64_t>(coefficients.size()) - 1; }
  const Integer& operator[](std::int64_t m) const { return coefficients.at(static_cast<std::size_t>(m)); }
};

}  // namespace ringzeta
