#include "ringzeta/repzeta.hpp"

#include <algorithm>
#include <limits>
#include <tuple>

#include "ringzeta/errors.hpp"
#include "ringzeta/parallel.hpp"

namespace ringzeta {

int ElementaryDivisorType::dimension_exponent() const {
  int sum = 0;
  for (int x : m) sum += level - x;
  if (sum % 2 != 0)
    throw InternalConsistency("odd rank defect " + std::to_string(sum) + " at level " + std::to_string(level));
  return sum / 2;
}

namespace {

using wide = __int128;

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t q) {
  return static_cast<std::int64_t>(wide(a) * b % q);
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t q) {
  std::int64_t r0 = q, r1 = mod(a, q), s0 = 0, s1 = 1;
  while (r1) {
    const std::int64_t t = r0 / r1;
    std::tie(r0, r1) = std::pair{r1, r0 - t * r1};
    std::tie(s0, s1) = std::pair{s1, s0 - t * s1};
  }
  if (r0 != 1) throw ContractError("not a unit");
  return mod(s0, q);
}

// Like smith_type, but on a scratch matrix with entries already reduced into [0, q).
ElementaryDivisorType smith_in_place(std::vector<std::int64_t>& a, int d, std::int64_t p, int N, std::int64_t q) {
  auto at = [&](int i, int j) -> std::int64_t& { return a[static_cast<std::size_t>(i * d + j)]; };
  auto val = [&](std::int64_t x) { return x == 0 ? N : valuation(x, p); };
  ElementaryDivisorType type{N, {}};
  for (int t = 0; t < d; ++t) {
    int bi = -1, bj = -1, bv = N;
    for (int i = t; i < d && bv > 0; ++i)
      for (int j = t; j < d; ++j) {
        const int v = val(at(i, j));
        if (v < bv) {
          bv = v;
          bi = i;
          bj = j;
          if (v == 0) break;
        }
      }
    if (bi < 0) {
      type.m.resize(d, N);
      break;
    }
    if (bi != t)
      for (int j = 0; j < d; ++j) std::swap(at(t, j), at(bi, j));
    if (bj != t)
      for (int i = 0; i < d; ++i) std::swap(at(i, t), at(i, bj));
    std::int64_t pv = 1;
    for (int k = 0; k < bv; ++k) pv *= p;
    const std::int64_t unit_inv = inverse_mod(at(t, t) / pv, q);
    for (int i = t + 1; i < d; ++i) {
      if (!at(i, t)) continue;
      const std::int64_t f = mulmod(at(i, t) / pv, unit_inv, q);
      for (int j = t; j < d; ++j) at(i, j) = mod(at(i, j) - mulmod(f, at(t, j), q), q);
    }
    for (int j = t + 1; j < d; ++j) {
      if (!at(t, j)) continue;
      const std::int64_t f = mulmod(at(t, j) / pv, unit_inv, q);
      for (int i = t; i < d; ++i) at(i, j) = mod(at(i, j) - mulmod(f, at(i, t), q), q);
    }
    type.m.push_back(bv);
  }
  std::sort(type.m.begin(), type.m.end());
  return type;
}

}  // namespace

ElementaryDivisorType smith_type(std::span<const std::int64_t> matrix, int d, std::int64_t p, int N) {
  if (N < 1) throw MalformedInput("level must be at least 1");
  if (!is_prime(p)) throw MalformedInput("p must be prime, got " + std::to_string(p));
  if (static_cast<std::size_t>(d) * static_cast<std::size_t>(d) != matrix.size())
    throw MalformedInput("matrix is not " + std::to_string(d) + " x " + std::to_string(d));
  const std::int64_t q = checked_pow(p, N);
  std::vector<std::int64_t> a(matrix.begin(), matrix.end());
  for (auto& x : a) x = mod(x, q);
  return smith_in_place(a, d, p, N, q);
}

LocalDirichletTruncation rep_zeta_class2(const Class2Presentation& pres, std::int64_t p, int J,
                                         const RepZetaOptions& options) {
  if (!is_prime(p)) throw MalformedInput("p must be prime, got " + std::to_string(p));
  if (p == 2) throw Unsupported("the orbit formula is used for characters of odd period only; p = 2 is excluded");
  if (J < 0) throw MalformedInput("depth must be non-negative");
  const auto R = commutator_matrix(pres);
  if (R.is_zero()) throw Unsupported("identically zero commutator matrix; the orbit formula degenerates");
  const int d = pres.d(), dp = pres.dprime();

  std::vector<Integer> c(J + 1, Integer(0));
  c[0] = 1;
  for (int N = 1;; ++N) {
    Integer predicted;
    mpz_ui_pow_ui(predicted.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(N * dp));
    if (predicted > options.ceiling)
      throw ResourceGuard("characters at level " + std::to_string(N), predicted, options.ceiling);
    const std::int64_t q = checked_pow(p, N);

    struct Shard {
      std::vector<std::int64_t> hist;
      int min_exponent = std::numeric_limits<int>::max();
    };
    std::vector<Shard> shards(static_cast<std::size_t>(q), Shard{std::vector<std::int64_t>(J + 1, 0)});
    parallel_for(shards.size(), options.threads, [&](std::size_t s) {
      std::vector<std::int64_t> l(dp, 0);
      l[0] = static_cast<std::int64_t>(s);
      auto& out = shards[s];
      while (true) {
        const bool primitive = std::any_of(l.begin(), l.end(), [&](std::int64_t x) { return x % p != 0; });
        if (primitive) {
          auto m = R.evaluate(l);
          for (auto& x : m) x = mod(x, q);
          const int e = smith_in_place(m, d, p, N, q).dimension_exponent();
          out.min_exponent = std::min(out.min_exponent, e);
          if (e <= J) ++out.hist[e];
        }
        int k = dp - 1;
        while (k >= 1 && ++l[k] == q) l[k--] = 0;
        if (k < 1) break;
      }
    });
    int min_exponent = std::numeric_limits<int>::max();
    for (const auto& s : shards) {
      min_exponent = std::min(min_exponent, s.min_exponent);
      for (int e = 0; e <= J; ++e) c[e] += s.hist[e];
    }
    if (N >= J && min_exponent > J) break;
    if (N >= J + options.stabilization_margin)
      throw StabilizationError("level " + std::to_string(N) + " still contributes to p^" + std::to_string(min_exponent) +
                               " <= p^" + std::to_string(J));
  }
  return {p, c};
}

ProjectivePlaneCurve::ProjectivePlaneCurve(IntegerPolynomial f) : f_(std::move(f)) {
  if (f_.variable_count() != 3) throw MalformedInput("a plane curve needs exactly three variables");
  if (f_.is_zero() || !f_.is_homogeneous()) throw MalformedInput("curve polynomial must be nonzero and homogeneous");
}

namespace {

void guard_prime(std::int64_t p) {
  if (!is_prime(p)) throw MalformedInput("p must be prime, got " + std::to_string(p));
  if (p > max_point_count_prime)
    throw ResourceGuard("point count over F_p", Integer(p), Integer(max_point_count_prime));
}

}  // namespace

Integer point_count_affine(const IntegerPolynomial& f, std::int64_t p) {
  if (f.variable_count() != 2) throw MalformedInput("affine point counts need exactly two variables");
  guard_prime(p);
  Integer n = 0;
  for (std::int64_t x = 0; x < p; ++x)
    for (std::int64_t y = 0; y < p; ++y) n += f.evaluate_mod({x, y}, p) == 0;
  return n;
}

Integer point_count_projective(const ProjectivePlaneCurve& curve, std::int64_t p) {
  guard_prime(p);
  const auto& f = curve.polynomial();
  Integer n = 0;
  for (std::int64_t x = 0; x < p; ++x)
    for (std::int64_t y = 0; y < p; ++y) n += f.evaluate_mod({x, y, 1}, p) == 0;
  for (std::int64_t x = 0; x < p; ++x) n += f.evaluate_mod({x, 1, 0}, p) == 0;
  n += f.evaluate_mod({1, 0, 0}, p) == 0;
  return n;
}

std::map<std::string, Integer> evaluate_weights(const std::map<std::string, WeightSpec>& weights, std::int64_t p) {
  std::map<std::string, Integer> out;
  for (const auto& [symbol, spec] : weights) {
    const auto f = IntegerPolynomial::parse(spec.polynomial);
    if (spec.kind == "projective")
      out[symbol] = point_count_projective(ProjectivePlaneCurve(f), p);
    else if (spec.kind == "affine")
      out[symbol] = point_count_affine(f, p);
    else
      throw MalformedInput("unknown weight kind '" + spec.kind + "' for " + symbol);
  }
  return out;
}

FunEqVerdict theoremD_check(const BivariateRationalFunction& f, int dprime) {
  return funeq_verdict(f, FunctionalEquation{1, dprime, 0});
}

FunEqVerdict theoremD_check(const PointCountHybrid& h, int dprime) {
  return hybrid_funeq_verdict(h, FunctionalEquation{1, dprime, 0});
}

}  // namespace ringzeta
