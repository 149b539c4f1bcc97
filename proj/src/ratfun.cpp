#include "ringzeta/ratfun.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ringzeta/errors.hpp"
#include "ringzeta/parallel.hpp"

namespace ringzeta {

BivariatePolynomial::BivariatePolynomial(const Rational& constant) {
  if (constant != 0) terms_[{0, 0}] = constant;
}

BivariatePolynomial BivariatePolynomial::monomial(int ex, int ey, const Rational& c) {
  BivariatePolynomial p;
  p.add_term(ex, ey, c);
  return p;
}

BivariatePolynomial BivariatePolynomial::one_minus(int a, int b) {
  BivariatePolynomial p(1);
  p.add_term(a, b, -1);
  return p;
}

Rational BivariatePolynomial::coefficient(int ex, int ey) const {
  auto it = terms_.find({ex, ey});
  return it == terms_.end() ? Rational(0) : it->second;
}

void BivariatePolynomial::add_term(int ex, int ey, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace({ex, ey}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BivariatePolynomial BivariatePolynomial::operator-() const {
  BivariatePolynomial r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

BivariatePolynomial& BivariatePolynomial::operator+=(const BivariatePolynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m.first, m.second, c);
  return *this;
}

BivariatePolynomial& BivariatePolynomial::operator-=(const BivariatePolynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m.first, m.second, -c);
  return *this;
}

BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b) {
  BivariatePolynomial r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma.first + mb.first, ma.second + mb.second, ca * cb);
  return r;
}

BivariatePolynomial& BivariatePolynomial::operator*=(const BivariatePolynomial& o) { return *this = *this * o; }

BivariatePolynomial BivariatePolynomial::pow(unsigned k) const {
  BivariatePolynomial r(1);
  for (unsigned i = 0; i < k; ++i) r *= *this;
  return r;
}

BivariatePolynomial BivariatePolynomial::shifted(int ex, int ey) const {
  BivariatePolynomial r;
  for (const auto& [m, c] : terms_) r.terms_[{m.first + ex, m.second + ey}] = c;
  return r;
}

BivariatePolynomial BivariatePolynomial::inverted() const {
  BivariatePolynomial r;
  for (const auto& [m, c] : terms_) r.terms_[{-m.first, -m.second}] = c;
  return r;
}

BivariatePolynomial BivariatePolynomial::inverted_x() const {
  BivariatePolynomial r;
  for (const auto& [m, c] : terms_) r.terms_[{-m.first, m.second}] = c;
  return r;
}

Monomial BivariatePolynomial::min_exponents() const {
  if (terms_.empty()) return {0, 0};
  Monomial lo = terms_.begin()->first;
  for (const auto& [m, c] : terms_) {
    lo.first = std::min(lo.first, m.first);
    lo.second = std::min(lo.second, m.second);
  }
  return lo;
}

std::map<int, Rational> BivariatePolynomial::at_x(std::int64_t p) const {
  std::map<int, Rational> out;
  for (const auto& [m, c] : terms_) out[m.second] += c * rational_pow(p, m.first);
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

namespace {

std::string power(const char* var, int e) {
  if (e == 0) return "";
  if (e == 1) return var;
  return std::string(var) + "^" + std::to_string(e);
}

}  // namespace

std::string BivariatePolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const std::string mono = power("X", m.first) + (m.first && m.second ? "*" : "") + power("Y", m.second);
    Rational mag = abs(c);
    out << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    if (mono.empty()) out << mag.get_str();
    else if (mag != 1) out << mag.get_str() << "*" << mono;
    else out << mono;
    first = false;
  }
  return out.str();
}

BivariateRationalFunction::BivariateRationalFunction(BivariatePolynomial numerator, std::vector<Monomial> factors,
                                                     BivariatePolynomial extra_denominator)
    : numerator_(std::move(numerator)), extra_(std::move(extra_denominator)) {
  if (extra_.is_zero()) throw MalformedInput("zero denominator");
  for (const auto& [a, b] : factors) {
    if (a == 0 && b == 0) throw PoleError("denominator factor 1 - X^0 Y^0 vanishes");
    if (a >= 0 && b >= 1) factors_.push_back({a, b});
    else extra_ *= BivariatePolynomial::one_minus(a, b);
  }
  std::sort(factors_.begin(), factors_.end());
  // A monomial extra denominator is folded into the numerator.
  if (extra_.terms().size() == 1) {
    const auto& [m, c] = *extra_.terms().begin();
    numerator_ = numerator_.shifted(-m.first, -m.second) * BivariatePolynomial(Rational(1) / c);
    extra_ = BivariatePolynomial(1);
  }
}

BivariatePolynomial BivariateRationalFunction::denominator() const {
  BivariatePolynomial d = extra_;
  for (const auto& [a, b] : factors_) d *= BivariatePolynomial::one_minus(a, b);
  return d;
}

BivariateRationalFunction BivariateRationalFunction::operator-() const {
  return BivariateRationalFunction(-numerator_, factors_, extra_);
}

BivariateRationalFunction operator*(const BivariateRationalFunction& a, const BivariateRationalFunction& b) {
  std::vector<Monomial> f = a.factors_;
  f.insert(f.end(), b.factors_.begin(), b.factors_.end());
  return BivariateRationalFunction(a.numerator_ * b.numerator_, f, a.extra_ * b.extra_);
}

namespace {

// Multiset difference a \ b for sorted vectors.
std::vector<Monomial> difference(const std::vector<Monomial>& a, const std::vector<Monomial>& b) {
  std::vector<Monomial> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

BivariatePolynomial product_of(const std::vector<Monomial>& factors) {
  BivariatePolynomial p(1);
  for (const auto& [a, b] : factors) p *= BivariatePolynomial::one_minus(a, b);
  return p;
}

}  // namespace

BivariateRationalFunction operator+(const BivariateRationalFunction& a, const BivariateRationalFunction& b) {
  std::vector<Monomial> common;
  std::set_union(a.factors_.begin(), a.factors_.end(), b.factors_.begin(), b.factors_.end(),
                 std::back_inserter(common));
  BivariatePolynomial na = a.numerator_ * product_of(difference(common, a.factors_));
  BivariatePolynomial nb = b.numerator_ * product_of(difference(common, b.factors_));
  if (a.extra_ == b.extra_) return BivariateRationalFunction(na + nb, common, a.extra_);
  return BivariateRationalFunction(na * b.extra_ + nb * a.extra_, common, a.extra_ * b.extra_);
}

BivariateRationalFunction operator-(const BivariateRationalFunction& a, const BivariateRationalFunction& b) {
  return a + (-b);
}

bool operator==(const BivariateRationalFunction& a, const BivariateRationalFunction& b) {
  const BivariatePolynomial lhs = a.numerator_ * b.extra_ * product_of(difference(b.factors_, a.factors_));
  const BivariatePolynomial rhs = b.numerator_ * a.extra_ * product_of(difference(a.factors_, b.factors_));
  return lhs == rhs;
}

BivariateRationalFunction BivariateRationalFunction::shifted(int ex, int ey) const {
  return BivariateRationalFunction(numerator_.shifted(ex, ey), factors_, extra_);
}

std::string BivariateRationalFunction::to_string() const {
  std::string s = "(" + numerator_.to_string() + ")";
  std::string den;
  for (const auto& [a, b] : factors_) den += "(1 - " + power("X", a) + (a ? "*" : "") + power("Y", b) + ")";
  if (!(extra_ == BivariatePolynomial(1))) den += "(" + extra_.to_string() + ")";
  return den.empty() ? s : s + " / " + den;
}

BivariateRationalFunction zp_factor(int a, int b) {
  if (b < 1 || a < 0) throw MalformedInput("zp_factor needs a >= 0 and b >= 1");
  return BivariateRationalFunction(BivariatePolynomial(1), {{a, b}});
}

std::vector<Rational> expand_series(const BivariateRationalFunction& f, std::int64_t p, int K) {
  if (K < 0) throw MalformedInput("negative expansion depth");
  const auto num = f.numerator().at_x(p);
  const auto ext = f.extra_denominator().at_x(p);
  if (ext.empty()) throw NonExpandable("denominator vanishes at X = " + std::to_string(p));
  std::vector<Rational> q(K + 1);
  if (num.empty()) return q;
  const int e0 = ext.begin()->first;
  if (num.begin()->first - e0 < 0) throw NonExpandable("series has negative powers of Y");
  const Rational& lead = ext.begin()->second;
  for (int i = 0; i <= K; ++i) {
    auto it = num.find(i + e0);
    Rational acc = it == num.end() ? Rational(0) : it->second;
    for (auto e = std::next(ext.begin()); e != ext.end(); ++e) {
      const int j = e->first - e0;
      if (j > i) break;
      acc -= e->second * q[i - j];
    }
    q[i] = acc / lead;
  }
  for (const auto& [a, b] : f.denominator_factors()) {
    const Rational c = rational_pow(p, a);
    for (int i = b; i <= K; ++i) q[i] += c * q[i - b];
  }
  return q;
}

LocalDirichletTruncation expand(const BivariateRationalFunction& f, std::int64_t p, int K) {
  LocalDirichletTruncation out{p, {}};
  for (const auto& c : expand_series(f, p, K)) out.coefficients.push_back(to_integer(c));
  return out;
}

BivariateRationalFunction invert_prime(const BivariateRationalFunction& f) {
  // 1/(1 - X^-a Y^-b) = -X^a Y^b / (1 - X^a Y^b)
  BivariatePolynomial num = f.numerator().inverted();
  int sx = 0, sy = 0;
  for (const auto& [a, b] : f.denominator_factors()) {
    sx += a;
    sy += b;
  }
  num = num.shifted(sx, sy);
  if (f.denominator_factors().size() % 2) num = -num;
  BivariatePolynomial ext = f.extra_denominator().inverted();
  const auto [mx, my] = ext.min_exponents();
  ext = ext.shifted(-mx, -my);
  num = num.shifted(-mx, -my);
  return BivariateRationalFunction(num, f.denominator_factors(), ext);
}

std::string to_string(const FunctionalEquation& fe) {
  return "(" + std::string(fe.sign < 0 ? "-1" : "+1") + ", " + std::to_string(fe.a) + ", " + std::to_string(fe.b) + ")";
}

namespace {

// Solves F = sign X^a Y^b G; nullopt if the ratio is not a signed monomial.
std::optional<FunctionalEquation> monomial_ratio(const BivariateRationalFunction& F,
                                                 const BivariateRationalFunction& G, std::string& detail) {
  const auto& ff = F.denominator_factors();
  const auto& gf = G.denominator_factors();
  const BivariatePolynomial P = F.numerator() * G.extra_denominator() * product_of(difference(gf, ff));
  const BivariatePolynomial Q = G.numerator() * F.extra_denominator() * product_of(difference(ff, gf));
  if (P.is_zero() || Q.is_zero()) throw ContractError("functional equation of the zero function");
  const auto& [lp, cp] = *P.terms().rbegin();
  const auto& [lq, cq] = *Q.terms().rbegin();
  const Rational c = cp / cq;
  const int a = lp.first - lq.first, b = lp.second - lq.second;
  if (!(P == Q.shifted(a, b) * BivariatePolynomial(c))) {
    detail = "ratio is not a monomial";
    return std::nullopt;
  }
  if (c != 1 && c != -1) {
    detail = "ratio " + c.get_str() + " X^" + std::to_string(a) + " Y^" + std::to_string(b) + " has a non-unit coefficient";
    return std::nullopt;
  }
  return FunctionalEquation{c > 0 ? 1 : -1, a, b};
}

FunEqVerdict finish(std::optional<FunctionalEquation> solved, const std::optional<FunctionalEquation>& expected,
                    std::string detail) {
  FunEqVerdict v;
  v.solved = solved;
  v.expected = expected;
  v.pass = expected && solved && *expected == *solved;
  v.detail = solved ? "solved " + to_string(*solved) : "no monomial functional equation: " + detail;
  if (expected) v.detail += "; expected " + to_string(*expected);
  return v;
}

}  // namespace

FunEqVerdict funeq_verdict(const BivariateRationalFunction& f, const std::optional<FunctionalEquation>& expected) {
  std::string detail;
  auto solved = monomial_ratio(invert_prime(f), f, detail);
  return finish(solved, expected, detail);
}

std::vector<Rational> PointCountHybrid::expand_series(std::int64_t p, int K,
                                                      const std::map<std::string, Integer>& weights) const {
  std::vector<Rational> total(K + 1);
  for (const auto& part : parts) {
    Rational w = 1;
    if (part.symbol != "1") {
      auto it = weights.find(part.symbol);
      if (it == weights.end()) throw ContractError("no point count supplied for weight '" + part.symbol + "'");
      w = Rational(it->second);
    }
    const auto s = ringzeta::expand_series(part.function, p, K);
    for (int i = 0; i <= K; ++i) total[i] += w * s[i];
  }
  return total;
}

LocalDirichletTruncation PointCountHybrid::expand(std::int64_t p, int K,
                                                  const std::map<std::string, Integer>& weights) const {
  LocalDirichletTruncation out{p, {}};
  for (const auto& c : expand_series(p, K, weights)) out.coefficients.push_back(to_integer(c));
  return out;
}

PointCountHybrid PointCountHybrid::times(const BivariateRationalFunction& g) const {
  PointCountHybrid h = *this;
  for (auto& part : h.parts) part.function = part.function * g;
  return h;
}

std::vector<std::string> PointCountHybrid::symbols() const {
  std::vector<std::string> out;
  for (const auto& part : parts)
    if (part.symbol != "1") out.push_back(part.symbol);
  return out;
}

FunEqVerdict hybrid_funeq_verdict(const PointCountHybrid& h, const std::optional<FunctionalEquation>& expected) {
  std::optional<FunctionalEquation> common;
  std::string detail;
  for (const auto& part : h.parts) {
    if (!part.dimension) throw ContractError("weight '" + part.symbol + "' has no declared dimension");
    if (part.function.is_zero()) continue;
    const auto inverted = invert_prime(part.function).shifted(-*part.dimension, 0);
    std::string why;
    auto solved = monomial_ratio(inverted, part.function, why);
    if (!solved) return finish(std::nullopt, expected, "part '" + part.symbol + "': " + why);
    if (common && !(*common == *solved))
      return finish(std::nullopt, expected,
                    "parts disagree: " + to_string(*common) + " vs " + to_string(*solved) + " for '" + part.symbol + "'");
    common = solved;
  }
  if (!common) throw ContractError("functional equation of the zero function");
  return finish(common, expected, detail);
}

LocalFactorProvider provider_from(const BivariateRationalFunction& f) {
  return [f](std::int64_t p, int depth) { return expand(f, p, depth); };
}

GlobalDirichletTruncation euler_product(const LocalFactorProvider& provider, std::int64_t P, std::int64_t M,
                                        int threads) {
  if (M < 1) throw MalformedInput("Euler product needs M >= 1");
  // Smallest-prime-factor sieve.
  std::vector<std::int64_t> spf(M + 1, 0);
  std::vector<std::int64_t> primes;
  for (std::int64_t i = 2; i <= M; ++i) {
    if (spf[i] == 0) {
      primes.push_back(i);
      for (std::int64_t j = i; j <= M; j += i)
        if (spf[j] == 0) spf[j] = i;
    }
  }
  for (auto q : primes)
    if (q > P)
      throw CoverageError("index " + std::to_string(q) + " <= " + std::to_string(M) + " has a prime factor above " +
                          std::to_string(P));

  std::vector<LocalDirichletTruncation> local(primes.size());
  parallel_for(primes.size(), threads, [&](std::size_t i) {
    const std::int64_t p = primes[i];
    int depth = 0;
    for (std::int64_t q = p; q <= M; q *= p) ++depth;
    local[i] = provider(p, depth);
    if (local[i].depth() < depth) throw InternalConsistency("local factor provider returned too few coefficients");
  });
  std::vector<std::size_t> index_of(M + 1, 0);
  for (std::size_t i = 0; i < primes.size(); ++i) index_of[primes[i]] = i;

  GlobalDirichletTruncation g;
  g.coefficients.assign(M + 1, Integer(0));
  g.coefficients[1] = 1;
  for (std::int64_t m = 2; m <= M; ++m) {
    const std::int64_t p = spf[m];
    std::int64_t r = m;
    int e = 0;
    while (r % p == 0) {
      r /= p;
      ++e;
    }
    g.coefficients[m] = local[index_of[p]].coefficients[e] * g.coefficients[r];
  }
  return g;
}

std::vector<RatioSample> asymptotic_ratio(const GlobalDirichletTruncation& g, double alpha, double b, double c,
                                          std::vector<std::int64_t> samples) {
  const std::int64_t M = g.bound();
  if (samples.empty()) {
    for (std::int64_t m = 10; m <= M; m *= 10) samples.push_back(m);
    if (samples.empty() || samples.back() != M) samples.push_back(M);
  }
  std::sort(samples.begin(), samples.end());
  std::vector<RatioSample> out;
  Integer s = 0;
  std::int64_t m = 0;
  for (auto target : samples) {
    if (target < 2 || target > M) throw MalformedInput("sample point outside 2..M");
    while (m < target) s += g[++m];
    const double scale = c * std::pow(static_cast<double>(target), alpha) * std::pow(std::log(static_cast<double>(target)), b);
    out.push_back({target, s, s.get_d() / scale});
  }
  return out;
}

}  // namespace ringzeta
