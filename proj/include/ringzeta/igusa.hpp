#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "ringzeta/algebra.hpp"
#include "ringzeta/dirichlet.hpp"
#include "ringzeta/numeric.hpp"
#include "ringzeta/polynomial.hpp"
#include "ringzeta/ratfun.hpp"

namespace ringzeta {

/// N_0..N_M with N_m = #{x in (Z/p^m)^n : f(x) = 0 mod p^m}.
struct PoincareTruncation {
  std::int64_t prime = 0;
  int variables = 0;
  std::vector<Integer> counts;

  int depth() const { return static_cast<int>(counts.size()) - 1; }
};

inline constexpr long default_poincare_ceiling = 100'000'000;

struct PoincareOptions {
  int threads = 1;
  Integer ceiling = Integer(default_poincare_ceiling);
};

/// One pass over (Z/p^M)^n; N_m is read off from the valuation of f at each point.
PoincareTruncation poincare_counts(const IntegerPolynomial& f, std::int64_t p, int M,
                                   const PoincareOptions& options = {});

/// Coefficients of t^0..t^{M-1} of Z_f: p^{-nm} N_m - p^{-n(m+1)} N_{m+1}.
std::vector<Rational> zf_series_from_poincare(const PoincareTruncation& pc);

/// Coefficients of t^0..t^M of P_f: p^{-nm} N_m.
std::vector<Rational> poincare_series(const PoincareTruncation& pc);

/// Z for the monomial x_1^e_1 ... x_n^e_n, as prod (X - 1) / (X - Y^e_i) with Y = p^-s.
BivariateRationalFunction monomial_closed_form(const std::vector<int>& exponents);

/// Upper-triangular coefficients a_ij of x_i x_j (i <= j).
struct QuadraticForm3 {
  std::array<std::array<Integer, 3>, 3> coefficients{};

  Integer coefficient(int i, int j) const;
  IntegerPolynomial polynomial() const;
  bool operator==(const QuadraticForm3&) const = default;
};

/// f(x) = L_23(x) x_1 - L_13(x) x_2 + L_12(x) x_3 with L_ij(x) = sum_k lambda_ij^k x_k.
QuadraticForm3 theorem3d_form(const StructureConstantAlgebra& alg);

/// Which ring supplies the quadratic form for p^i L.
enum class FormSource { base, scaled };

/// zeta_{p^i L} to depth K from the Igusa zeta function of the form of L.
/// Counts f modulo p^{K-i}, exactly the depth the first K+1 coefficients need.
LocalDirichletTruncation theorem3d_zeta(const StructureConstantAlgebra& alg, std::int64_t p, int i, int K,
                                        FormSource source = FormSource::base, const PoincareOptions& options = {});

}  // namespace ringzeta
