#include "ringzeta/igusa.hpp"

#include "ringzeta/catalog.hpp"
#include "ringzeta/errors.hpp"
#include "ringzeta/parallel.hpp"

namespace ringzeta {

PoincareTruncation poincare_counts(const IntegerPolynomial& f, std::int64_t p, int M, const PoincareOptions& options) {
  if (!is_prime(p)) throw MalformedInput("p must be prime, got " + std::to_string(p));
  if (M < 0) throw MalformedInput("depth must be non-negative");
  const int n = f.variable_count();
  Integer predicted = 1;
  for (int k = 0; k < n * M; ++k) {
    predicted *= p;
    if (predicted > options.ceiling) break;
  }
  if (predicted > options.ceiling) {
    mpz_ui_pow_ui(predicted.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(n * M));
    throw ResourceGuard("Poincare count over (Z/p^M)^n", predicted, options.ceiling);
  }

  PoincareTruncation pc{p, n, std::vector<Integer>(M + 1, Integer(0))};
  pc.counts[0] = 1;
  if (M == 0) return pc;
  const std::int64_t q = checked_pow(p, M);

  // Histogram of min(v_p(f(x)), M) over x mod p^M, sharded by the first coordinate.
  const std::size_t shards = n == 0 ? 1 : static_cast<std::size_t>(q);
  std::vector<std::vector<std::int64_t>> hist(shards, std::vector<std::int64_t>(M + 1, 0));
  parallel_for(shards, options.threads, [&](std::size_t s) {
    std::vector<std::int64_t> x(n, 0);
    if (n) x[0] = static_cast<std::int64_t>(s);
    auto& h = hist[s];
    while (true) {
      const std::int64_t v = f.evaluate_mod(x, q);
      h[v == 0 ? M : valuation(v, p)] += 1;
      int k = n - 1;
      while (k >= 1 && ++x[k] == q) x[k--] = 0;
      if (k < 1) break;
    }
  });
  std::vector<Integer> at_least(M + 2, Integer(0));
  for (const auto& h : hist)
    for (int v = 0; v <= M; ++v) at_least[v] += h[v];
  for (int m = M - 1; m >= 0; --m) at_least[m] += at_least[m + 1];
  // A point mod p^m lifts to p^{n(M-m)} points mod p^M.
  for (int m = 1; m <= M; ++m) {
    Integer lifts;
    mpz_ui_pow_ui(lifts.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(n * (M - m)));
    pc.counts[m] = at_least[m] / lifts;
  }
  return pc;
}

std::vector<Rational> poincare_series(const PoincareTruncation& pc) {
  std::vector<Rational> out;
  for (int m = 0; m <= pc.depth(); ++m) out.push_back(Rational(pc.counts[m]) * rational_pow(pc.prime, -static_cast<long>(pc.variables) * m));
  return out;
}

std::vector<Rational> zf_series_from_poincare(const PoincareTruncation& pc) {
  if (pc.depth() < 1) throw MalformedInput("Poincare truncation needs depth at least 1");
  const auto P = poincare_series(pc);
  std::vector<Rational> z;
  for (int m = 0; m < pc.depth(); ++m) z.push_back(P[m] - P[m + 1]);
  return z;
}

BivariateRationalFunction monomial_closed_form(const std::vector<int>& exponents) {
  BivariateRationalFunction r = 1;
  for (int e : exponents) {
    if (e < 0) throw MalformedInput("negative exponent");
    const BivariatePolynomial x_minus_one = BivariatePolynomial::monomial(1, 0) - BivariatePolynomial(1);
    const BivariatePolynomial den = BivariatePolynomial::monomial(1, 0) - BivariatePolynomial::monomial(0, e);
    r = r * BivariateRationalFunction(x_minus_one, {}, den);
  }
  return r;
}

Integer QuadraticForm3::coefficient(int i, int j) const {
  if (i > j) std::swap(i, j);
  return coefficients[i][j];
}

IntegerPolynomial QuadraticForm3::polynomial() const {
  IntegerPolynomial f({"x1", "x2", "x3"});
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) {
      std::vector<int> e(3, 0);
      e[i] += 1;
      e[j] += 1;
      f.add_term(e, coefficients[i][j]);
    }
  return f;
}

QuadraticForm3 theorem3d_form(const StructureConstantAlgebra& alg) {
  if (alg.rank() != 3) throw MalformedInput("the quadratic form needs a rank-3 ring, got rank " + std::to_string(alg.rank()));
  if (!validate(alg).antisymmetry.pass) throw MalformedInput("the quadratic form needs an antisymmetric ring");
  QuadraticForm3 q;
  // f = sum over (i, j, outer) of sign * lambda_ij^k x_k x_outer
  const std::array<std::tuple<int, int, int, int>, 3> pieces{{{1, 2, 0, 1}, {0, 2, 1, -1}, {0, 1, 2, 1}}};
  for (const auto& [i, j, outer, sign] : pieces)
    for (int k = 0; k < 3; ++k) {
      const auto c = alg.constant(i, j, k);
      if (!c) continue;
      const int a = std::min(k, outer), b = std::max(k, outer);
      q.coefficients[a][b] += Integer(sign) * c;
    }
  return q;
}

LocalDirichletTruncation theorem3d_zeta(const StructureConstantAlgebra& alg, std::int64_t p, int i, int K,
                                        FormSource source, const PoincareOptions& options) {
  if (i < 0 || K < 0) throw MalformedInput("scaling exponent and depth must be non-negative");
  const auto form = theorem3d_form(source == FormSource::base ? alg : scale(alg, p, i));
  const int M = std::max(K - i, 0);
  std::vector<Rational> z;
  if (M > 0) z = zf_series_from_poincare(poincare_counts(form.polynomial(), p, M, options));

  auto series_of = [&](const BivariateRationalFunction& f) { return expand_series(f, p, K); };
  auto times = [&](const std::vector<Rational>& a, const std::vector<Rational>& b) {
    std::vector<Rational> c(K + 1, Rational(0));
    for (int x = 0; x <= K; ++x)
      for (int y = 0; x + y <= K; ++y) c[x + y] += a[x] * b[y];
    return c;
  };

  // Z_f(s - 2) reweights t^m by p^{2m}.
  std::vector<Rational> shifted_z(K + 1, Rational(0));
  for (int m = 0; m < M; ++m) shifted_z[m] = z[m] * rational_pow(p, 2 * m);
  // zeta_p(2s - 2) zeta_p(s - 2) p^{(2-s)(i+1)} (1 - p^{-1})^{-1}
  const auto tail = series_of(zp_factor(2, 2) * zp_factor(2, 1) *
                              BivariateRationalFunction(BivariatePolynomial::monomial(2 * (i + 1) + 1, i + 1),
                                                        {}, BivariatePolynomial::monomial(1, 0) - BivariatePolynomial(1)));
  const auto correction = times(shifted_z, tail);
  const auto abelian = series_of(zeta_Zn(3));

  LocalDirichletTruncation out{p, {}};
  for (int k = 0; k <= K; ++k) {
    const Rational c = abelian[k] - correction[k];
    if (!is_integral(c) || c < 0)
      throw InternalConsistency("assembled coefficient of p^" + std::to_string(k) + " is " + c.get_str() +
                                ", not a non-negative integer");
    out.coefficients.push_back(c.get_num());
  }
  return out;
}

}  // namespace ringzeta
