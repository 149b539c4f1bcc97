#include <doctest.h>

#include <cmath>
#include <numbers>

#include "ringzeta/catalog.hpp"
#include "ringzeta/errors.hpp"
#include "ringzeta/ratfun.hpp"
#include "support.hpp"

using namespace ringzeta;

namespace {

using P = BivariatePolynomial;
using F = BivariateRationalFunction;

std::vector<Integer> coeffs(std::initializer_list<long> xs) { return testing::ints(xs); }

// Truncated series oracle: plain integer convolution of geometric series, independent of expand().
std::vector<Integer> series_oracle(const std::vector<std::pair<int, int>>& factors,
                                   const std::map<int, long>& numerator_at_p, std::int64_t p, int K) {
  std::vector<Integer> r(K + 1);
  for (const auto& [e, c] : numerator_at_p)
    if (e <= K) r[e] += c;
  for (const auto& [a, b] : factors) {
    std::vector<Integer> g(K + 1), out(K + 1);
    for (int m = 0; m * b <= K; ++m) g[m * b] = int_pow(int_pow(Integer(static_cast<long>(p)), a), m);
    for (int i = 0; i <= K; ++i)
      for (int j = 0; i + j <= K; ++j) out[i + j] += r[i] * g[j];
    r = out;
  }
  return r;
}

long partitions_at_most(int n, int parts) {
  if (n == 0) return 1;
  if (parts == 0) return 0;
  // largest part size <= parts by conjugation: count partitions of n with parts in 1..parts
  std::vector<long> ways(n + 1, 0);
  ways[0] = 1;
  for (int k = 1; k <= parts; ++k)
    for (int s = k; s <= n; ++s) ways[s] += ways[s - k];
  return ways[n];
}

long partitions_bruteforce(int n, int max_part, int parts_left) {
  if (n == 0) return 1;
  if (parts_left == 0) return 0;
  long total = 0;
  for (int first = std::min(n, max_part); first >= 1; --first) total += partitions_bruteforce(n - first, first, parts_left - 1);
  return total;
}

F random_function(std::mt19937_64& g) {
  P num;
  const int terms = static_cast<int>(testing::uniform(g, 1, 5));
  for (int t = 0; t < terms; ++t)
    num.add_term(static_cast<int>(testing::uniform(g, -3, 6)), static_cast<int>(testing::uniform(g, -2, 6)),
                 Rational(testing::uniform(g, -9, 9), testing::uniform(g, 1, 4)));
  std::vector<Monomial> den;
  const int nf = static_cast<int>(testing::uniform(g, 0, 4));
  for (int i = 0; i < nf; ++i)
    den.push_back({static_cast<int>(testing::uniform(g, 0, 5)), static_cast<int>(testing::uniform(g, 1, 4))});
  P extra(1);
  if (testing::uniform(g, 0, 3) == 0) extra = P(1) + P::monomial(1, 0, Rational(testing::uniform(g, 1, 3)));
  return F(num, den, extra);
}

}  // namespace

TEST_SUITE("ratfun") {

TEST_CASE("polynomial arithmetic") {
  const P x = P::monomial(1, 0), y = P::monomial(0, 1);
  CHECK((x + y) * (x - y) == x * x - y * y);
  CHECK((x + y).pow(2).terms().size() == 3);
  CHECK((x - x).is_zero());
  CHECK(P::one_minus(2, 3).coefficient(2, 3) == -1);
  CHECK(x.inverted() == P::monomial(-1, 0));
  CHECK((P(1) + x * y).at_x(3) == std::map<int, Rational>{{0, 1}, {1, 3}});
  CHECK(P::monomial(-2, 1).at_x(2) == std::map<int, Rational>{{1, Rational(1, 4)}});
}

TEST_CASE("zp_factor expansions") {
  CHECK(expand(zp_factor(0, 1), 7, 3).coefficients == coeffs({1, 1, 1, 1}));
  CHECK(expand(zp_factor(1, 1), 3, 3).coefficients == coeffs({1, 3, 9, 27}));
  CHECK(expand(zp_factor(3, 2), 2, 4).coefficients == coeffs({1, 0, 8, 0, 64}));
  CHECK_THROWS_AS(zp_factor(1, 0), MalformedInput);
}

TEST_CASE("catalog expansions match golden values") {
  CHECK(expand(formula_catalog("zeta_Zn(2)").function(), 3, 2).coefficients == coeffs({1, 4, 13}));
  CHECK(expand(formula_catalog("heisenberg_subring").function(), 2, 2).coefficients == coeffs({1, 3, 19}));
  CHECK(expand(formula_catalog("heisenberg_subring").function(), 3, 4).coefficients == coeffs({1, 4, 49, 157, 1534}));
  CHECK(expand(formula_catalog("heisenberg_ideal").function(), 5, 4).coefficients == coeffs({1, 6, 31, 181, 931}));
  CHECK(expand(formula_catalog("sl2_two").function(), 2, 4).coefficients == coeffs({1, 3, 19, 43, 155}));
  CHECK(expand(formula_catalog("sl2_odd").function(), 3, 4).coefficients == coeffs({1, 4, 25, 85, 382}));
  CHECK(expand(formula_catalog("sl2_odd").function(), 5, 4).coefficients == coeffs({1, 6, 61, 331, 2456}));
  CHECK(expand(formula_catalog("free_nilpotent_2_3_subring").function(), 2, 4).coefficients ==
        coeffs({1, 7, 203, 1667, 23219}));
  CHECK(expand(formula_catalog("free_nilpotent_2_3_subring").function(), 3, 4).coefficients ==
        coeffs({1, 13, 1534, 27886, 1497145}));
  CHECK(expand(formula_catalog("componentwise_2_subring").function(), 3, 4).coefficients == coeffs({1, 3, 4, 7, 13}));
  for (std::int64_t p : {2, 3, 5, 7}) {
    const auto c = expand(formula_catalog("heisenberg_rep").function(), p, 3).coefficients;
    CHECK(c == std::vector<Integer>{1, p - 1, p * p - p, p * p * p - p * p});
  }
}

TEST_CASE("expansion agrees with an independent convolution") {
  const auto f = formula_catalog("sl2_odd").function();
  for (std::int64_t p : {3, 5, 7})
    CHECK(expand(f, p, 8).coefficients ==
          series_oracle({{0, 1}, {1, 1}, {1, 2}, {2, 2}}, {{0, 1}, {3, -static_cast<long>(p)}}, p, 8));
}

TEST_CASE("the 16-term numerator is transcribed term by term") {
  const auto f = formula_catalog("free_nilpotent_2_3_subring").function();
  const P w = f.numerator() * F(P(1), {{8, 4}}).numerator();  // numerator includes (1 - X^8 Y^4)
  const P expected_w = P(1) + P::monomial(3, 2) + P::monomial(4, 2) + P::monomial(5, 2) - P::monomial(4, 3) -
                       P::monomial(5, 3) - P::monomial(6, 3) - P::monomial(7, 4) - P::monomial(9, 4) -
                       P::monomial(10, 5) - P::monomial(11, 5) - P::monomial(12, 5) + P::monomial(11, 6) +
                       P::monomial(12, 6) + P::monomial(13, 6) + P::monomial(16, 8);
  CHECK(f.numerator() == P::one_minus(8, 4) * expected_w);
  CHECK(expected_w.terms().size() == 16);
  CHECK(w == f.numerator());
}

TEST_CASE("non-expandable functions") {
  CHECK_THROWS_AS(expand(F(P::monomial(0, -1)), 2, 2), NonExpandable);
  CHECK_THROWS_AS(expand_series(F(P(1), {}, P::monomial(0, 1) + P::monomial(0, 2)), 2, 2), NonExpandable);
  // Y / (Y - Y^2) = 1/(1 - Y) is fine
  CHECK(expand(F(P::monomial(0, 1), {}, P::monomial(0, 1) - P::monomial(0, 2)), 2, 3).coefficients ==
        coeffs({1, 1, 1, 1}));
  // X - 1 vanishes at X = 1 only; at p = 2 the division is exact
  CHECK(expand_series(F(P(1), {}, P::monomial(1, 0) - P(1)), 2, 1) == std::vector<Rational>{1, 0});
  CHECK_THROWS_AS(expand(F(P(Rational(1, 2))), 2, 0), InternalConsistency);
}

TEST_CASE("rational function identities") {
  const F a = zp_factor(0, 1) * zp_factor(1, 1);
  CHECK(a == F(P(1), {{1, 1}, {0, 1}}));
  CHECK(a + a == F(P(2), {{0, 1}, {1, 1}}));
  CHECK((a - a).is_zero());
  // 1/(1-Y) = (1+Y)/(1-Y^2)
  CHECK(zp_factor(0, 1) == F(P(1) + P::monomial(0, 1), {{0, 2}}));
  CHECK_FALSE(zp_factor(0, 1) == zp_factor(0, 2));
  // n = 2 ip-style identity: 1/(1-Y^2) * (1 + (1 + X^-1) XY/(1-XY)) = 1/((1-Y)(1-XY))
  const F lhs = zp_factor(0, 2) * (F(1) + F(P(1) + P::monomial(-1, 0)) * F(P::monomial(1, 1), {{1, 1}}));
  CHECK(lhs == zp_factor(0, 1) * zp_factor(1, 1));
}

TEST_CASE("invert_prime examples") {
  const F z2 = zp_factor(0, 1) * zp_factor(1, 1);
  CHECK(invert_prime(z2) == z2.shifted(1, 2));
  const F rep = formula_catalog("heisenberg_rep").function();
  CHECK(invert_prime(rep) == rep.shifted(1, 0));
  CHECK(invert_prime(F(1)) == F(1));
}

TEST_CASE("invert_prime is an involution (seeded, 200 trials)") {
  auto g = testing::rng(20240611);
  for (int trial = 0; trial < 200; ++trial) {
    const F f = random_function(g);
    CHECK(invert_prime(invert_prime(f)) == f);
  }
}

TEST_CASE("functional equations") {
  for (int n = 1; n <= 6; ++n) {
    const auto v = funeq_verdict(zeta_Zn(n), FunctionalEquation{n % 2 ? -1 : 1, n * (n - 1) / 2, n});
    CAPTURE(v.detail);
    CHECK(v.pass);
  }
  const auto h = funeq_verdict(formula_catalog("heisenberg_subring").function());
  REQUIRE(h.solved);
  CHECK(*h.solved == FunctionalEquation{-1, 3, 3});
  CHECK(funeq_verdict(formula_catalog("heisenberg_rep").function(), FunctionalEquation{1, 1, 0}).pass);
  CHECK(funeq_verdict(formula_catalog("sl2_odd").function(), FunctionalEquation{-1, 3, 3}).pass);
  const auto two = funeq_verdict(formula_catalog("sl2_two").function());
  CHECK_FALSE(two.solved);
  CHECK(two.detail.find("no monomial") != std::string::npos);
  const auto wrong = funeq_verdict(zeta_Zn(2), FunctionalEquation{1, 1, 0});
  CHECK_FALSE(wrong.pass);
  // a monomial ratio with a non-unit coefficient is not a functional equation
  CHECK_FALSE(funeq_verdict(F(P(1) + P::monomial(0, 1, 2))).solved);
  CHECK_THROWS_AS(funeq_verdict(F(P())), ContractError);
}

TEST_CASE("hybrid functional equations") {
  const auto normal = formula_catalog("dusautoy_normal");
  auto v = hybrid_funeq_verdict(normal.hybrid(), FunctionalEquation{-1, 36, 15});
  CAPTURE(v.detail);
  CHECK(v.pass);
  CHECK(hybrid_funeq_verdict(formula_catalog("dusautoy_rep").hybrid(), FunctionalEquation{1, 3, 0}).pass);
  CHECK(hybrid_funeq_verdict(formula_catalog("dusautoy_rep_as_printed").hybrid(), FunctionalEquation{1, 3, 0}).pass);

  // constant-only hybrid reduces to funeq_verdict
  PointCountHybrid c{{{"1", 0, formula_catalog("heisenberg_subring").function()}}};
  CHECK(hybrid_funeq_verdict(c).solved == funeq_verdict(formula_catalog("heisenberg_subring").function()).solved);

  // weight of the wrong dimension breaks the equation
  auto bad = normal.hybrid();
  bad.parts[1].dimension = 0;
  CHECK_FALSE(hybrid_funeq_verdict(bad, FunctionalEquation{-1, 36, 15}).pass);
  bad.parts[1].dimension.reset();
  CHECK_THROWS_AS(hybrid_funeq_verdict(bad), ContractError);
}

TEST_CASE("hybrid evaluation needs every weight") {
  const auto rep = formula_catalog("dusautoy_rep").hybrid();
  CHECK_THROWS_AS(rep.expand(5, 2, {}), ContractError);
  const auto c = rep.expand(5, 3, {{"b", Integer(8)}}).coefficients;
  // W1 = (1 - Y^3)/(1 - X^3 Y^3), W2 = (X - 1)(1 - Y) Y^2 / ((1 - X^2 Y^2)(1 - X^3 Y^3))
  CHECK(c == coeffs({1, 0, 4 * 8, 125 - 1 - 4 * 8}));
}

TEST_CASE("the printed sign of the second representation part gives negative counts") {
  const auto printed = formula_catalog("dusautoy_rep_as_printed").hybrid();
  const auto c = printed.expand(5, 2, {{"b", Integer(8)}}).coefficients;
  CHECK(c[2] == -4 * 8);
  CHECK(formula_catalog("dusautoy_rep").note.size() > 0);
}

TEST_CASE("abelian p-group counts are partition numbers") {
  CHECK(expand(formula_catalog("abelian_pgroups(2)").function(), 3, 4).coefficients[4] == 3);
  for (int d = 1; d <= 4; ++d) {
    const auto c = expand(formula_catalog("abelian_pgroups(" + std::to_string(d) + ")").function(), 2, 10).coefficients;
    for (int n = 0; n <= 10; ++n) {
      CHECK(c[n] == partitions_bruteforce(n, n, d));
      CHECK(c[n] == partitions_at_most(n, d));
    }
  }
  // class-2 two-generator entry expands with p-independent coefficients
  CHECK(expand(formula_catalog("class2_pgroups_2gen").function(), 2, 6) .coefficients ==
        expand(formula_catalog("class2_pgroups_2gen").function(), 7, 6).coefficients);
}

TEST_CASE("euler products") {
  const auto g = euler_product(provider_from(zeta_Zn(2)), 97, 100);
  for (std::int64_t m = 1; m <= 100; ++m) {
    long sigma = 0;
    for (long d = 1; d <= m; ++d)
      if (m % d == 0) sigma += d;
    CHECK(g[m] == sigma);
  }
  CHECK(g[6] == 12);
  const auto one = euler_product(provider_from(zeta_Zn(1)), 50, 50);
  for (std::int64_t m = 1; m <= 50; ++m) CHECK(one[m] == 1);
  CHECK(euler_product(provider_from(formula_catalog("heisenberg_ideal").function()), 7, 7)[4] == 7);
  CHECK_THROWS_AS(euler_product(provider_from(zeta_Zn(2)), 10, 20), CoverageError);
}

TEST_CASE("euler coefficients are multiplicative (seeded)") {
  auto g = testing::rng(555);
  const auto heis = euler_product(provider_from(formula_catalog("heisenberg_subring").function()), 400, 400, 3);
  const auto z3 = euler_product(provider_from(zeta_Zn(3)), 400, 400);
  std::int64_t checked = 0;
  while (checked < 300) {
    const std::int64_t m = testing::uniform(g, 1, 20), n = testing::uniform(g, 1, 20);
    if (std::gcd(m, n) != 1) continue;
    CHECK(heis[m * n] == heis[m] * heis[n]);
    CHECK(z3[m * n] == z3[m] * z3[n]);
    ++checked;
  }
}

TEST_CASE("euler product does not depend on the thread count") {
  const auto f = provider_from(formula_catalog("sl2_odd").function());
  const auto a = euler_product(f, 300, 300, 1);
  const auto b = euler_product(f, 300, 300, 4);
  CHECK(a.coefficients == b.coefficients);
}

TEST_CASE("asymptotic ratios") {
  const auto z1 = euler_product(provider_from(zeta_Zn(1)), 1000, 1000);
  for (const auto& s : asymptotic_ratio(z1, 1, 0, 1)) CHECK(s.ratio == doctest::Approx(1.0));
  const auto z2 = euler_product(provider_from(zeta_Zn(2)), 10000, 10000);
  const auto r = asymptotic_ratio(z2, 2, 0, std::numbers::pi * std::numbers::pi / 12);
  CHECK(std::abs(r.back().ratio - 1) < 0.02);
}

TEST_CASE("catalog parsing") {
  const auto c = FormulaCatalog::parse(R"({"f": {"numerator": [[[0,0,"1/2"]]], "denominator": [[0,1]]}})");
  CHECK(expand_series(c.lookup("f").function(), 2, 1) == std::vector<Rational>{Rational(1, 2), Rational(1, 2)});
  CHECK_THROWS_AS(FormulaCatalog::parse("{not json"), MalformedInput);
  CHECK_THROWS_AS(formula_catalog("no_such_formula"), LookupError);
  CHECK(formula_catalog("zeta_Zn(4)").funeq == FunctionalEquation{1, 6, 4});
  CHECK(formula_catalog("dusautoy_normal").weights.at("b").kind == "projective");
  CHECK_THROWS_AS(formula_catalog("dusautoy_rep").function(), ContractError);
}

}
