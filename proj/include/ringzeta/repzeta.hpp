#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "ringzeta/algebra.hpp"
#include "ringzeta/catalog.hpp"
#include "ringzeta/dirichlet.hpp"
#include "ringzeta/polynomial.hpp"
#include "ringzeta/ratfun.hpp"

namespace ringzeta {

/// Valuations m_1 <= ... <= m_d of the elementary divisors mod p^N, capped at N.
struct ElementaryDivisorType {
  int level = 0;
  std::vector<int> m;

  /// sum (N - m_i) / 2; throws InternalConsistency if the sum is odd.
  int dimension_exponent() const;
  bool operator==(const ElementaryDivisorType&) const = default;
};

/// Diagonalizes the row-major d x d matrix over Z/p^N by unit pivots of minimal valuation.
ElementaryDivisorType smith_type(std::span<const std::int64_t> matrix, int d, std::int64_t p, int N);

inline constexpr long default_character_ceiling = 100'000'000;

struct RepZetaOptions {
  int threads = 1;
  Integer ceiling = Integer(default_character_ceiling);
  /// Levels past J that may still contribute before the computation gives up.
  int stabilization_margin = 2;
};

/// Twist-isoclass counts c_{p^0}, ..., c_{p^J} from the primitive characters of each level.
LocalDirichletTruncation rep_zeta_class2(const Class2Presentation& pres, std::int64_t p, int J,
                                         const RepZetaOptions& options = {});

inline constexpr std::int64_t max_point_count_prime = 10'000;

/// Homogeneous polynomial in three variables.
class ProjectivePlaneCurve {
 public:
  explicit ProjectivePlaneCurve(IntegerPolynomial f);
  const IntegerPolynomial& polynomial() const { return f_; }

 private:
  IntegerPolynomial f_;
};

/// #{(x, y) in F_p^2 : f(x, y) = 0}.
Integer point_count_affine(const IntegerPolynomial& f, std::int64_t p);
/// Points of the curve in P^2(F_p).
Integer point_count_projective(const ProjectivePlaneCurve& curve, std::int64_t p);

/// Values of a formula's point-count symbols at p.
std::map<std::string, Integer> evaluate_weights(const std::map<std::string, WeightSpec>& weights, std::int64_t p);

/// Checks invert_prime(f) = X^{d'} f.
FunEqVerdict theoremD_check(const BivariateRationalFunction& f, int dprime);
FunEqVerdict theoremD_check(const PointCountHybrid& h, int dprime);

}  // namespace ringzeta
