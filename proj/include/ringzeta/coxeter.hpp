#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ringzeta/numeric.hpp"
#include "ringzeta/ratfun.hpp"

namespace ringzeta {

/// Laurent polynomial in one variable with exact rational coefficients.
class UnivariatePolynomial {
 public:
  UnivariatePolynomial() = default;
  UnivariatePolynomial(const Rational& c);  // NOLINT
  UnivariatePolynomial(long c) : UnivariatePolynomial(Rational(c)) {}  // NOLINT
  static UnivariatePolynomial monomial(int e, const Rational& c = 1);
  /// Coefficients of X^0, X^1, ...
  static UnivariatePolynomial from_coefficients(const std::vector<Rational>& c);

  const std::map<int, Rational>& terms() const { return terms_; }
  Rational coefficient(int e) const;
  bool is_zero() const { return terms_.empty(); }
  int degree() const;

  UnivariatePolynomial& operator+=(const UnivariatePolynomial& o);
  UnivariatePolynomial& operator-=(const UnivariatePolynomial& o);
  friend UnivariatePolynomial operator+(UnivariatePolynomial a, const UnivariatePolynomial& b) { return a += b; }
  friend UnivariatePolynomial operator-(UnivariatePolynomial a, const UnivariatePolynomial& b) { return a -= b; }
  friend UnivariatePolynomial operator*(const UnivariatePolynomial& a, const UnivariatePolynomial& b);
  bool operator==(const UnivariatePolynomial&) const = default;

  Rational evaluate(const Rational& x) const;
  /// P(1/X).
  UnivariatePolynomial inverted() const;
  /// The same polynomial as a bivariate one in X.
  BivariatePolynomial to_bivariate() const;
  std::string to_string() const;

 private:
  std::map<int, Rational> terms_;
};

/// Permutation of {1..n} given by its images w(1), ..., w(n).
class PermutationData {
 public:
  explicit PermutationData(std::vector<int> images);
  static PermutationData identity(int n);
  static PermutationData longest(int n);
  /// Product of cycles in S_n, each cycle (a b c) sending a -> b -> c -> a; rightmost cycle acts first.
  static PermutationData from_cycles(int n, const std::vector<std::vector<int>>& cycles);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i - 1]; }
  const std::vector<int>& images() const { return images_; }
  bool operator==(const PermutationData&) const = default;

  /// (this * o)(i) = this(o(i)).
  PermutationData operator*(const PermutationData& o) const;
  PermutationData inverse() const;
  std::string to_string() const;

 private:
  std::vector<int> images_;
};

using IndexSet = std::set<int>;

/// Inversion count.
int length(const PermutationData& w);
/// {i : w(i+1) < w(i)}.
IndexSet descent_set(const PermutationData& w);

/// Visits S_n in lexicographic order of image lists.
void for_each_permutation(int n, const std::function<void(const PermutationData&)>& visit);
/// All subsets of {1..n-1}.
std::vector<IndexSet> subsets_of_ranks(int n);
std::string to_string(const IndexSet& s);

inline constexpr int max_symmetric_degree = 8;

UnivariatePolynomial gaussian_binomial(int n, const IndexSet& I);
UnivariatePolynomial descent_sum(int n, const IndexSet& I);
/// Counts flags of type I in F_q^n by walking subspace chains.
Integer flag_count(int n, const IndexSet& I, std::int64_t q);

struct IdentityVerdict {
  bool pass = true;
  std::optional<PermutationData> witness;
  std::string detail;
};

IdentityVerdict longest_element_identities(int n);

using IpFamily = std::map<IndexSet, BivariateRationalFunction>;

/// sum_I binom(n, I)(1/X) W_I.
BivariateRationalFunction ip_assemble(const IpFamily& family, int n);

struct IpVerdict {
  bool hypothesis = false;
  std::optional<IndexSet> witness;
  /// Set only when the hypothesis holds.
  std::optional<bool> conclusion;
  bool pass() const { return hypothesis && conclusion.value_or(false); }
  std::string detail;
};

IpVerdict ip_hypothesis_check(const IpFamily& family, int n);

/// W_I = prod_{i in I} X_i / (1 - X_i) with X_i = X^{i(n-i)} Y^i.
IpFamily abelian_family(int n);
/// The same family, each W_I obtained from the strict series of the empty cone system.
IpFamily cone_family(int n);

}  // namespace ringzeta
