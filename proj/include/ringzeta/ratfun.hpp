#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ringzeta/dirichlet.hpp"
#include "ringzeta/numeric.hpp"

namespace ringzeta {

/// Exponent pair (e_X, e_Y).
using Monomial = std::pair<int, int>;

/// Laurent polynomial in X and Y with exact rational coefficients.
class BivariatePolynomial {
 public:
  BivariatePolynomial() = default;
  BivariatePolynomial(const Rational& constant);  // NOLINT: constants convert implicitly
  BivariatePolynomial(long constant) : BivariatePolynomial(Rational(constant)) {}  // NOLINT

  static BivariatePolynomial monomial(int ex, int ey, const Rational& c = 1);
  /// 1 - X^a Y^b
  static BivariatePolynomial one_minus(int a, int b);

  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(int ex, int ey) const;
  void add_term(int ex, int ey, const Rational& c);

  BivariatePolynomial operator-() const;
  BivariatePolynomial& operator+=(const BivariatePolynomial& o);
  BivariatePolynomial& operator-=(const BivariatePolynomial& o);
  BivariatePolynomial& operator*=(const BivariatePolynomial& o);
  friend BivariatePolynomial operator+(BivariatePolynomial a, const BivariatePolynomial& b) { return a += b; }
  friend BivariatePolynomial operator-(BivariatePolynomial a, const BivariatePolynomial& b) { return a -= b; }
  friend BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b);
  bool operator==(const BivariatePolynomial&) const = default;

  BivariatePolynomial pow(unsigned k) const;
  /// Multiplies by X^ex Y^ey.
  BivariatePolynomial shifted(int ex, int ey) const;
  /// P(1/X, 1/Y).
  BivariatePolynomial inverted() const;
  /// P(X^-1, Y) for univariate-in-X use.
  BivariatePolynomial inverted_x() const;
  /// Smallest exponents over the support; (0, 0) for the zero polynomial.
  Monomial min_exponents() const;
  /// Substitutes X = p; result maps Y-exponent to coefficient.
  std::map<int, Rational> at_x(std::int64_t p) const;

  std::string to_string() const;

 private:
  std::map<Monomial, Rational> terms_;
};

/// N / (E * prod (1 - X^a Y^b)). Factors kept sorted; E defaults to 1.
class BivariateRationalFunction {
 public:
  BivariateRationalFunction() : numerator_(1) {}
  BivariateRationalFunction(BivariatePolynomial numerator, std::vector<Monomial> factors = {},  // NOLINT
                            BivariatePolynomial extra_denominator = BivariatePolynomial(1));
  BivariateRationalFunction(long c) : BivariateRationalFunction(BivariatePolynomial(c)) {}  // NOLINT

  const BivariatePolynomial& numerator() const { return numerator_; }
  const std::vector<Monomial>& denominator_factors() const { return factors_; }
  const BivariatePolynomial& extra_denominator() const { return extra_; }

  /// Fully expanded denominator polynomial.
  BivariatePolynomial denominator() const;
  bool is_zero() const { return numerator_.is_zero(); }

  BivariateRationalFunction operator-() const;
  friend BivariateRationalFunction operator*(const BivariateRationalFunction& a, const BivariateRationalFunction& b);
  friend BivariateRationalFunction operator+(const BivariateRationalFunction& a, const BivariateRationalFunction& b);
  friend BivariateRationalFunction operator-(const BivariateRationalFunction& a, const BivariateRationalFunction& b);
  /// Identity of rational functions, decided by cross-multiplication.
  friend bool operator==(const BivariateRationalFunction& a, const BivariateRationalFunction& b);

  BivariateRationalFunction shifted(int ex, int ey) const;

  std::string to_string() const;

 private:
  BivariatePolynomial numerator_;
  std::vector<Monomial> factors_;
  BivariatePolynomial extra_;
};

/// 1 / (1 - X^a Y^b).
BivariateRationalFunction zp_factor(int a, int b);

/// Coefficients of Y^0..Y^K at X = p, exact rationals.
std::vector<Rational> expand_series(const BivariateRationalFunction& f, std::int64_t p, int K);
/// As expand_series, but the coefficients must be integers (InternalConsistency otherwise).
LocalDirichletTruncation expand(const BivariateRationalFunction& f, std::int64_t p, int K);

/// f(1/X, 1/Y) rewritten with the same denominator factors.
BivariateRationalFunction invert_prime(const BivariateRationalFunction& f);

struct FunctionalEquation {
  int sign = 1;
  int a = 0;
  int b = 0;
  bool operator==(const FunctionalEquation&) const = default;
};
std::string to_string(const FunctionalEquation& fe);

struct FunEqVerdict {
  std::optional<FunctionalEquation> solved;  ///< nullopt: no monomial functional equation
  std::optional<FunctionalEquation> expected;
  /// Meaningful only when expected is set.
  bool pass = false;
  std::string detail;
};

/// Solves invert_prime(f) = sign X^a Y^b f.
FunEqVerdict funeq_verdict(const BivariateRationalFunction& f,
                           const std::optional<FunctionalEquation>& expected = std::nullopt);

/// Sum of W_t weighted by formal point-count symbols; symbol "1" is the constant part.
struct HybridPart {
  std::string symbol;
  std::optional<int> dimension;
  BivariateRationalFunction function;
};

struct PointCountHybrid {
  std::vector<HybridPart> parts;

  /// Evaluates sum_t weight_t * W_t at X = p to depth K.
  std::vector<Rational> expand_series(std::int64_t p, int K, const std::map<std::string, Integer>& weights) const;
  LocalDirichletTruncation expand(std::int64_t p, int K, const std::map<std::string, Integer>& weights) const;
  /// Multiplies every part by g.
  PointCountHybrid times(const BivariateRationalFunction& g) const;
  std::vector<std::string> symbols() const;
};

/// Symbols transform as symbol -> X^-dim symbol. Throws ContractError on a missing dimension.
FunEqVerdict hybrid_funeq_verdict(const PointCountHybrid& h,
                                  const std::optional<FunctionalEquation>& expected = std::nullopt);

using LocalFactorProvider = std::function<LocalDirichletTruncation(std::int64_t p, int depth)>;

LocalFactorProvider provider_from(const BivariateRationalFunction& f);

/// Multiplicative assembly of a_1..a_M from local factors at primes <= P.
/// Throws CoverageError if some m <= M has a prime factor above P.
GlobalDirichletTruncation euler_product(const LocalFactorProvider& provider, std::int64_t P, std::int64_t M,
                                        int threads = 1);

struct RatioSample {
  std::int64_t m;
  Integer partial_sum;
  double ratio;
};

/// s_m / (c m^alpha (log m)^b) at the given sample points (default: powers of ten and M).
std::vector<RatioSample> asymptotic_ratio(const GlobalDirichletTruncation& g, double alpha, double b, double c,
                                          std::vector<std::int64_t> samples = {});

}  // namespace ringzeta
