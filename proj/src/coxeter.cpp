#include "ringzeta/coxeter.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "ringzeta/cones.hpp"
#include "ringzeta/errors.hpp"

namespace ringzeta {

UnivariatePolynomial::UnivariatePolynomial(const Rational& c) {
  if (c != 0) terms_[0] = c;
}

UnivariatePolynomial UnivariatePolynomial::monomial(int e, const Rational& c) {
  UnivariatePolynomial p;
  if (c != 0) p.terms_[e] = c;
  return p;
}

UnivariatePolynomial UnivariatePolynomial::from_coefficients(const std::vector<Rational>& c) {
  UnivariatePolynomial p;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) p.terms_[static_cast<int>(i)] = c[i];
  return p;
}

Rational UnivariatePolynomial::coefficient(int e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

int UnivariatePolynomial::degree() const {
  if (terms_.empty()) throw ContractError("degree of the zero polynomial");
  return terms_.rbegin()->first;
}

UnivariatePolynomial& UnivariatePolynomial::operator+=(const UnivariatePolynomial& o) {
  for (const auto& [e, c] : o.terms_) {
    auto& slot = terms_[e];
    slot += c;
    if (slot == 0) terms_.erase(e);
  }
  return *this;
}

UnivariatePolynomial& UnivariatePolynomial::operator-=(const UnivariatePolynomial& o) {
  for (const auto& [e, c] : o.terms_) {
    auto& slot = terms_[e];
    slot -= c;
    if (slot == 0) terms_.erase(e);
  }
  return *this;
}

UnivariatePolynomial operator*(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
  UnivariatePolynomial r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.terms_[ea + eb] += ca * cb;
  std::erase_if(r.terms_, [](const auto& t) { return t.second == 0; });
  return r;
}

Rational UnivariatePolynomial::evaluate(const Rational& x) const {
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    if (e < 0 && x == 0) throw PoleError("negative power evaluated at zero");
    Rational power = 1;
    const Rational base = e < 0 ? Rational(1 / x) : x;
    for (int i = 0; i < std::abs(e); ++i) power *= base;
    sum += c * power;
  }
  return sum;
}

UnivariatePolynomial UnivariatePolynomial::inverted() const {
  UnivariatePolynomial r;
  for (const auto& [e, c] : terms_) r.terms_[-e] = c;
  return r;
}

BivariatePolynomial UnivariatePolynomial::to_bivariate() const {
  BivariatePolynomial r;
  for (const auto& [e, c] : terms_) r.add_term(e, 0, c);
  return r;
}

std::string UnivariatePolynomial::to_string() const {
  return to_bivariate().to_string();
}

PermutationData::PermutationData(std::vector<int> images) : images_(std::move(images)) {
  const int n = size();
  std::vector<bool> seen(n + 1, false);
  for (int x : images_) {
    if (x < 1 || x > n || seen[x]) throw MalformedInput("images do not form a permutation of 1.." + std::to_string(n));
    seen[x] = true;
  }
}

PermutationData PermutationData::identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return PermutationData(std::move(v));
}

PermutationData PermutationData::longest(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = n - i;
  return PermutationData(std::move(v));
}

PermutationData PermutationData::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  PermutationData w = identity(n);
  for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
    const auto& cyc = *it;
    std::vector<int> img = identity(n).images_;
    std::vector<bool> used(n + 1, false);
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      const int a = cyc[k];
      if (a < 1 || a > n || used[a]) throw MalformedInput("bad cycle entry " + std::to_string(a));
      used[a] = true;
      img[a - 1] = cyc[(k + 1) % cyc.size()];
    }
    w = PermutationData(std::move(img)) * w;
  }
  return w;
}

PermutationData PermutationData::operator*(const PermutationData& o) const {
  if (o.size() != size()) throw ContractError("composing permutations of different degree");
  std::vector<int> v(size());
  for (int i = 1; i <= size(); ++i) v[i - 1] = (*this)(o(i));
  return PermutationData(std::move(v));
}

PermutationData PermutationData::inverse() const {
  std::vector<int> v(size());
  for (int i = 1; i <= size(); ++i) v[(*this)(i) - 1] = i;
  return PermutationData(std::move(v));
}

std::string PermutationData::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < images_.size(); ++i) out << (i ? "," : "") << images_[i];
  out << ']';
  return out.str();
}

int length(const PermutationData& w) {
  int inv = 0;
  for (int i = 1; i <= w.size(); ++i)
    for (int j = i + 1; j <= w.size(); ++j) inv += w(j) < w(i);
  return inv;
}

IndexSet descent_set(const PermutationData& w) {
  IndexSet d;
  for (int i = 1; i < w.size(); ++i)
    if (w(i + 1) < w(i)) d.insert(i);
  return d;
}

void for_each_permutation(int n, const std::function<void(const PermutationData&)>& visit) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  do visit(PermutationData(v));
  while (std::next_permutation(v.begin(), v.end()));
}

std::vector<IndexSet> subsets_of_ranks(int n) {
  std::vector<IndexSet> out;
  const int k = std::max(n - 1, 0);
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    IndexSet s;
    for (int i = 0; i < k; ++i)
      if (mask >> i & 1) s.insert(i + 1);
    out.push_back(std::move(s));
  }
  return out;
}

std::string to_string(const IndexSet& s) {
  std::string out = "{";
  for (auto it = s.begin(); it != s.end(); ++it) out += (it == s.begin() ? "" : ",") + std::to_string(*it);
  return out + "}";
}

namespace {

void check_ranks(int n, const IndexSet& I) {
  if (n < 1) throw MalformedInput("degree must be positive");
  for (int i : I)
    if (i < 1 || i > n - 1) throw MalformedInput("index " + std::to_string(i) + " outside [1, n-1]");
}

// q-Pascal: binom(n, k) = binom(n-1, k-1) + X^k binom(n-1, k).
UnivariatePolynomial q_binomial(int n, int k) {
  std::vector<std::vector<UnivariatePolynomial>> t(n + 1, std::vector<UnivariatePolynomial>(n + 1));
  for (int m = 0; m <= n; ++m) {
    t[m][0] = 1;
    for (int j = 1; j <= m; ++j) t[m][j] = t[m - 1][j - 1] + UnivariatePolynomial::monomial(j) * t[m - 1][j];
  }
  return t[n][k];
}

void guard_degree(int n) {
  if (n > max_symmetric_degree)
    throw ResourceGuard("S_" + std::to_string(n) + " is too large to enumerate", Integer(n), Integer(max_symmetric_degree));
}

}  // namespace

UnivariatePolynomial gaussian_binomial(int n, const IndexSet& I) {
  check_ranks(n, I);
  UnivariatePolynomial r = 1;
  int upper = n;
  for (auto it = I.rbegin(); it != I.rend(); ++it) {
    r = r * q_binomial(upper, *it);
    upper = *it;
  }
  return r;
}

UnivariatePolynomial descent_sum(int n, const IndexSet& I) {
  check_ranks(n, I);
  guard_degree(n);
  std::vector<Rational> c(n * (n - 1) / 2 + 1, Rational(0));
  for_each_permutation(n, [&](const PermutationData& w) {
    const auto d = descent_set(w);
    if (std::includes(I.begin(), I.end(), d.begin(), d.end())) c[length(w)] += 1;
  });
  return UnivariatePolynomial::from_coefficients(c);
}

Integer flag_count(int n, const IndexSet& I, std::int64_t q) {
  check_ranks(n, I);
  if (!is_prime(q)) throw Unsupported("flags are counted over prime fields only, got q = " + std::to_string(q));
  if (q > 3 || n > 4)
    throw ResourceGuard("flag enumeration limited to q <= 3 and n <= 4", Integer(checked_pow(q, n)), Integer(81));

  const int size = static_cast<int>(checked_pow(q, n));
  auto add = [&](int a, int b) {
    int r = 0, place = 1;
    for (int i = 0; i < n; ++i, a /= q, b /= q, place *= q) r += static_cast<int>((a % q + b % q) % q) * place;
    return r;
  };
  auto scale = [&](int a, int c) {
    int r = 0, place = 1;
    for (int i = 0; i < n; ++i, a /= q, place *= q) r += static_cast<int>((a % q) * c % q) * place;
    return r;
  };

  // Every subspace as a membership mask, grouped by dimension.
  using Subspace = std::vector<char>;
  std::vector<std::set<Subspace>> by_dim(n + 1);
  Subspace zero(size, 0);
  zero[0] = 1;
  by_dim[0].insert(zero);
  for (int d = 0; d < n; ++d)
    for (const auto& s : by_dim[d])
      for (int v = 0; v < size; ++v) {
        if (s[v]) continue;
        Subspace t(size, 0);
        for (int u = 0; u < size; ++u)
          if (s[u])
            for (int c = 0; c < q; ++c) t[add(u, scale(v, c))] = 1;
        by_dim[d + 1].insert(std::move(t));
      }

  auto contains = [](const Subspace& small, const Subspace& big) {
    for (std::size_t i = 0; i < small.size(); ++i)
      if (small[i] && !big[i]) return false;
    return true;
  };

  std::map<Subspace, Integer> chains{{*by_dim[n].begin(), 1}};
  // Walk from the whole space downwards through the requested dimensions.
  for (auto it = I.rbegin(); it != I.rend(); ++it) {
    std::map<Subspace, Integer> next;
    for (const auto& s : by_dim[*it])
      for (const auto& [big, count] : chains)
        if (contains(s, big)) next[s] += count;
    chains = std::move(next);
  }
  Integer total = 0;
  for (const auto& [s, c] : chains) total += c;
  return total;
}

IdentityVerdict longest_element_identities(int n) {
  guard_degree(n);
  IdentityVerdict v;
  const auto w0 = PermutationData::longest(n);
  const int top = n * (n - 1) / 2;
  IndexSet all;
  for (int i = 1; i < n; ++i) all.insert(i);
  for_each_permutation(n, [&](const PermutationData& w) {
    if (!v.pass) return;
    // w followed by w0, i.e. values reversed
    const auto ww0 = w0 * w;
    IndexSet complement;
    const auto d = descent_set(w);
    std::set_difference(all.begin(), all.end(), d.begin(), d.end(), std::inserter(complement, complement.end()));
    if (length(w) + length(ww0) != top) {
      v.pass = false;
      v.detail = "length(w) + length(w w0) != " + std::to_string(top);
    } else if (descent_set(ww0) != complement) {
      v.pass = false;
      v.detail = "descent set of w w0 is not the complement";
    }
    if (!v.pass) v.witness = w;
  });
  if (v.pass) v.detail = "checked " + std::to_string(top) + " = l(w) + l(w w0) and complementary descents on S_" + std::to_string(n);
  return v;
}

namespace {

const BivariateRationalFunction& member(const IpFamily& family, const IndexSet& I) {
  auto it = family.find(I);
  if (it == family.end()) throw MalformedInput("family has no function for I = " + to_string(I));
  return it->second;
}

}  // namespace

BivariateRationalFunction ip_assemble(const IpFamily& family, int n) {
  BivariateRationalFunction sum(BivariatePolynomial{});
  for (const auto& I : subsets_of_ranks(n))
    sum = sum + BivariateRationalFunction(gaussian_binomial(n, I).inverted().to_bivariate()) * member(family, I);
  return sum;
}

IpVerdict ip_hypothesis_check(const IpFamily& family, int n) {
  IpVerdict v;
  v.hypothesis = true;
  for (const auto& I : subsets_of_ranks(n)) {
    BivariateRationalFunction rhs(BivariatePolynomial{});
    for (const auto& J : subsets_of_ranks(n))
      if (std::includes(I.begin(), I.end(), J.begin(), J.end())) rhs = rhs + member(family, J);
    if (I.size() % 2 == 1) rhs = -rhs;
    if (!(invert_prime(member(family, I)) == rhs)) {
      v.hypothesis = false;
      v.witness = I;
      v.detail = "inversion identity fails at I = " + to_string(I);
      return v;
    }
  }
  const auto W = ip_assemble(family, n);
  auto expected = W.shifted(n * (n - 1) / 2, 0);
  if (n % 2 == 0) expected = -expected;
  v.conclusion = invert_prime(W) == expected;
  v.detail = *v.conclusion ? "hypothesis and conclusion hold" : "hypothesis holds but the assembled function fails";
  return v;
}

namespace {

Monomial abelian_weight(int n, int i) { return {i * (n - i), i}; }

}  // namespace

IpFamily abelian_family(int n) {
  IpFamily f;
  for (const auto& I : subsets_of_ranks(n)) {
    BivariateRationalFunction w = 1;
    for (int i : I) {
      const auto [a, b] = abelian_weight(n, i);
      w = w * BivariateRationalFunction(BivariatePolynomial::monomial(a, b), {{a, b}});
    }
    f.emplace(I, w);
  }
  return f;
}

IpFamily cone_family(int n) {
  IpFamily f;
  for (const auto& I : subsets_of_ranks(n)) {
    if (I.empty()) {
      f.emplace(I, BivariateRationalFunction(1));
      continue;
    }
    const int k = static_cast<int>(I.size());
    const auto sys = DiophantineConeSystem::equalities({}, k);
    const auto strict = reciprocal_form(rational_form(sys), k);
    Assignment a;
    for (int i : I) a.push_back(abelian_weight(n, i));
    f.emplace(I, substitute(strict, a));
  }
  return f;
}

}  // namespace ringzeta
