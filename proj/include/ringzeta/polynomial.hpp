#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ringzeta/numeric.hpp"

namespace ringzeta {

/// Multivariate polynomial with integer coefficients over named variables.
class IntegerPolynomial {
 public:
  using Exponents = std::vector<int>;

  explicit IntegerPolynomial(std::vector<std::string> variables = {});

  /// Parses integer literals, variables, +, -, *, ^ (non-negative integer exponents) and parentheses.
  /// Without an explicit variable list the identifiers found are sorted alphabetically.
  static IntegerPolynomial parse(const std::string& text, std::vector<std::string> variables = {});
  static IntegerPolynomial constant(const Integer& c, std::vector<std::string> variables = {});
  static IntegerPolynomial variable(int index, std::vector<std::string> variables);

  const std::vector<std::string>& variables() const { return variables_; }
  int variable_count() const { return static_cast<int>(variables_.size()); }
  const std::map<Exponents, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exponents& e, const Integer& c);
  IntegerPolynomial& operator+=(const IntegerPolynomial& o);
  IntegerPolynomial& operator-=(const IntegerPolynomial& o);
  friend IntegerPolynomial operator+(IntegerPolynomial a, const IntegerPolynomial& b) { return a += b; }
  friend IntegerPolynomial operator-(IntegerPolynomial a, const IntegerPolynomial& b) { return a -= b; }
  friend IntegerPolynomial operator*(const IntegerPolynomial& a, const IntegerPolynomial& b);
  IntegerPolynomial operator-() const;
  IntegerPolynomial pow(unsigned k) const;
  bool operator==(const IntegerPolynomial&) const = default;

  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;

  Integer evaluate(const std::vector<Integer>& x) const;
  /// Value mod `modulus` in [0, modulus); modulus below 2^62.
  std::int64_t evaluate_mod(const std::vector<std::int64_t>& x, std::int64_t modulus) const;

  std::string to_string() const;

 private:
  std::vector<std::string> variables_;
  std::map<Exponents, Integer> terms_;
};

}  // namespace ringzeta
