#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ringzeta/numeric.hpp"
#include "ringzeta/ratfun.hpp"

namespace ringzeta {

enum class RowKind { equality, less_equal };

/// Non-negative integer solutions of phi * alpha = 0 (rows of kind less_equal read phi_i * alpha <= 0).
/// Inequality rows get one appended slack column each, so the stored matrix has only equalities.
class DiophantineConeSystem {
 public:
  DiophantineConeSystem(std::vector<std::vector<std::int64_t>> phi, std::vector<RowKind> kinds, int variables);
  /// All rows equalities.
  static DiophantineConeSystem equalities(std::vector<std::vector<std::int64_t>> phi, int variables);

  int original_variables() const { return m_; }
  /// Columns after slack rewriting.
  int variables() const { return static_cast<int>(m_ + slack_.size()); }
  const std::vector<int>& slack_columns() const { return slack_; }
  const std::vector<std::vector<std::int64_t>>& matrix() const { return matrix_; }
  const std::vector<std::vector<std::int64_t>>& original_rows() const { return phi_; }
  const std::vector<RowKind>& row_kinds() const { return kinds_; }
  std::size_t rank() const { return rank_; }

 private:
  int m_;
  std::vector<std::vector<std::int64_t>> phi_;
  std::vector<RowKind> kinds_;
  std::vector<std::vector<std::int64_t>> matrix_;
  std::vector<int> slack_;
  std::size_t rank_ = 0;
};

using Exponent = std::vector<int>;
/// Integer-coefficient Laurent polynomial in several variables.
using MultiPolynomial = std::map<Exponent, Integer>;

struct MultivariateSeriesTruncation {
  int variables = 0;
  int bound = 0;
  MultiPolynomial terms;
  bool operator==(const MultivariateSeriesTruncation&) const = default;
};

/// numerator / prod_rays (1 - X^ray)
struct MultivariateRationalForm {
  int variables = 0;
  MultiPolynomial numerator;
  std::vector<Exponent> rays;
};

struct ConeGuard {
  int max_variables = 12;
  int max_bound = 60;
  long max_points = 50'000'000;
};

/// Solutions with every original coordinate in [0, B] (strict: [1, B], slacks >= 1 as well).
/// Slack coordinates are reported as 0.
MultivariateSeriesTruncation brute_series(const DiophantineConeSystem& sys, int B, bool strict,
                                          const ConeGuard& guard = {});

struct ExtremeRays {
  std::vector<Exponent> rays;  ///< primitive, lexicographically sorted
  int dimension = 0;
};

/// Completely fundamental solutions via support enumeration.
ExtremeRays extreme_rays(const DiophantineConeSystem& sys, int max_columns = 16);

/// Simplicial cones of a triangulation, as index lists into the ray list.
std::vector<std::vector<int>> triangulate(const std::vector<Exponent>& rays);

/// Generating function of all solutions from a half-open triangulation.
MultivariateRationalForm rational_form(const DiophantineConeSystem& sys);

/// Series of a rational form with original coordinates in [0, B]; slack coordinates marginalized.
MultivariateSeriesTruncation expand(const MultivariateRationalForm& form, const DiophantineConeSystem& sys, int B);

/// The form of E(1/X) times (-1)^d, which should equal the strict series.
MultivariateRationalForm reciprocal_form(const MultivariateRationalForm& form, int dimension);

enum class ReciprocityOutcome { pass, fail, inconclusive };
std::string to_string(ReciprocityOutcome o);

struct ReciprocityVerdict {
  ReciprocityOutcome outcome;
  int dimension = 0;
  std::string detail;
};

ReciprocityVerdict reciprocity_check(const DiophantineConeSystem& sys, int B);

/// Per-variable image monomial X^first Y^second; (0, 0) means the constant 1.
using Assignment = std::vector<Monomial>;

BivariateRationalFunction substitute(const MultivariateRationalForm& form, const Assignment& assignment);
BivariatePolynomial substitute(const MultivariateSeriesTruncation& series, const Assignment& assignment);

/// Linear form sum_j coefficients[j] n_j.
using LinearForm = std::vector<std::int64_t>;

/// sum over n in {0..B}^r (strict: {1..B}^r) of prod X_rho^n_rho prod_sigma Y_sigma^{min_tau L_{sigma tau}(n)}.
/// forms[sigma] lists the t forms for Y_sigma. Exponents are (n_1..n_r, k_1..k_s).
MultivariateSeriesTruncation minform_series(const std::vector<std::vector<LinearForm>>& forms, int r, int B,
                                            bool strict, const ConeGuard& guard = {});

std::string to_string(const Exponent& e);

}  // namespace ringzeta
