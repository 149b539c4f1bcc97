#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "ringzeta/catalog.hpp"
#include "ringzeta/cones.hpp"
#include "ringzeta/errors.hpp"

using namespace ringzeta;

namespace {

DiophantineConeSystem stanley() { return DiophantineConeSystem::equalities({{1, 1, -1, -1}}, 4); }
DiophantineConeSystem empty_system(int m) { return DiophantineConeSystem::equalities({}, m); }

// m3 <= m1 + m2, slack appended as the fourth column.
DiophantineConeSystem heisenberg_system() {
  return DiophantineConeSystem({{-1, -1, 1}}, {RowKind::less_equal}, 3);
}

std::vector<std::pair<std::string, DiophantineConeSystem>> fixtures() {
  return {
      {"stanley", stanley()},
      {"empty1", empty_system(1)},
      {"empty2", empty_system(2)},
      {"empty3", empty_system(3)},
      {"empty4", empty_system(4)},
      {"diagonal", DiophantineConeSystem::equalities({{1, -1}}, 2)},
      {"zero_only", DiophantineConeSystem::equalities({{1, 1}}, 2)},
      {"weighted", DiophantineConeSystem::equalities({{1, 2, -1, -1}}, 4)},
      {"three_by_three", DiophantineConeSystem::equalities({{1, 1, 1, -1, -1, -1}}, 6)},
      {"two_rows", DiophantineConeSystem::equalities({{1, 1, -1, -1, 0}, {0, 1, 0, -1, 1}}, 5)},
      {"non_unimodular", DiophantineConeSystem::equalities({{2, 3, -5}}, 3)},
      {"heisenberg_slack", heisenberg_system()},
      {"halfplane", DiophantineConeSystem({{1, -2}}, {RowKind::less_equal}, 2)},
      {"mixed", DiophantineConeSystem({{1, 1, -1}, {1, -3, 0}}, {RowKind::equality, RowKind::less_equal}, 3)},
  };
}

}  // namespace

TEST_SUITE("cones") {

TEST_CASE("brute series examples") {
  const auto s = brute_series(stanley(), 2, false);
  CHECK(s.terms.count({1, 0, 1, 0}) == 1);
  CHECK(s.terms.count({1, 1, 1, 1}) == 1);
  CHECK(s.terms.count({1, 0, 0, 0}) == 0);
  const auto e = brute_series(empty_system(2), 1, false);
  CHECK(e.terms.size() == 4);
  CHECK(brute_series(stanley(), 0, true).terms.empty());
  // slack exponents are reported as zero
  for (const auto& [x, c] : brute_series(heisenberg_system(), 3, false).terms) {
    CHECK(x.size() == 4);
    CHECK(x[3] == 0);
    CHECK(x[2] <= x[0] + x[1]);
  }
}

TEST_CASE("brute series guard") {
  CHECK_THROWS_AS(brute_series(empty_system(13), 1, false), ResourceGuard);
  CHECK_THROWS_AS(brute_series(empty_system(2), 61, false), ResourceGuard);
  CHECK_THROWS_AS(brute_series(empty_system(12), 60, false), ResourceGuard);
}

TEST_CASE("extreme rays examples") {
  const auto s = extreme_rays(stanley());
  CHECK(s.rays == std::vector<Exponent>{{0, 1, 0, 1}, {0, 1, 1, 0}, {1, 0, 0, 1}, {1, 0, 1, 0}});
  CHECK(s.dimension == 3);
  const auto e = extreme_rays(empty_system(3));
  CHECK(e.rays == std::vector<Exponent>{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}});
  CHECK(e.dimension == 3);
  const auto z = extreme_rays(DiophantineConeSystem::equalities({{1, 1}}, 2));
  CHECK(z.rays.empty());
  CHECK(z.dimension == 0);
}

TEST_CASE("extreme rays are primitive solutions on faces of the right size") {
  for (const auto& [name, sys] : fixtures()) {
    CAPTURE(name);
    const auto er = extreme_rays(sys);
    CHECK(std::is_sorted(er.rays.begin(), er.rays.end()));
    for (const auto& r : er.rays) {
      int g = 0;
      int zeros = 0;
      for (int x : r) {
        CHECK(x >= 0);
        g = std::gcd(g, x);
        zeros += x == 0;
      }
      CHECK(g == 1);
      for (const auto& row : sys.matrix()) {
        std::int64_t v = 0;
        for (std::size_t j = 0; j < r.size(); ++j) v += row[j] * r[j];
        CHECK(v == 0);
      }
      // tight coordinates number at least (variables - rank - 1)
      CHECK(zeros >= sys.variables() - static_cast<int>(sys.rank()) - 1);
    }
  }
}

TEST_CASE("triangulation covers the stanley cone with two simplices") {
  const auto er = extreme_rays(stanley());
  const auto t = triangulate(er.rays);
  CHECK(t.size() == 2);
  for (const auto& s : t) CHECK(s.size() == 3);
}

TEST_CASE("rational forms of the examples") {
  const auto form = rational_form(stanley());
  CHECK(form.rays.size() == 4);
  // (1 - X1X2X3X4) as numerator over the four rays
  MultiPolynomial expected{{{0, 0, 0, 0}, 1}, {{1, 1, 1, 1}, -1}};
  CHECK(form.numerator == expected);

  const auto e2 = rational_form(empty_system(2));
  CHECK(e2.numerator == MultiPolynomial{{{0, 0}, 1}});
  CHECK(e2.rays == std::vector<Exponent>{{0, 1}, {1, 0}});

  const auto diag = rational_form(DiophantineConeSystem::equalities({{1, -1}}, 2));
  CHECK(diag.rays == std::vector<Exponent>{{1, 1}});
  CHECK(diag.numerator == MultiPolynomial{{{0, 0}, 1}});
}

TEST_CASE("rational form expansion equals the brute series on every fixture") {
  for (const auto& [name, sys] : fixtures()) {
    CAPTURE(name);
    const auto form = rational_form(sys);
    for (int B : {0, 3, 8}) CHECK(expand(form, sys, B).terms == brute_series(sys, B, false).terms);
  }
}

TEST_CASE("reciprocity") {
  CHECK(reciprocity_check(stanley(), 6).outcome == ReciprocityOutcome::pass);
  for (int m = 1; m <= 4; ++m) CHECK(reciprocity_check(empty_system(m), 5).outcome == ReciprocityOutcome::pass);
  CHECK(reciprocity_check(DiophantineConeSystem::equalities({{1, 1}}, 2), 5).outcome == ReciprocityOutcome::inconclusive);
  for (const auto& [name, sys] : fixtures()) {
    CAPTURE(name);
    const auto v = reciprocity_check(sys, 6);
    CAPTURE(v.detail);
    CHECK(v.outcome != ReciprocityOutcome::fail);
  }
}

TEST_CASE("a wrong sign convention is detected") {
  const auto sys = stanley();
  const auto form = rational_form(sys);
  const auto wrong = expand(reciprocal_form(form, 2), sys, 4);
  CHECK_FALSE(wrong.terms == brute_series(sys, 4, true).terms);
}

TEST_CASE("substitution reproduces the Heisenberg Euler factor") {
  const auto form = rational_form(heisenberg_system());
  const Assignment a{{0, 1}, {1, 1}, {2, 1}, {0, 0}};
  const auto f = substitute(form, a);
  const BivariatePolynomial num = BivariatePolynomial::one_minus(3, 3);
  CHECK(f == BivariateRationalFunction(num, {{0, 1}, {1, 1}, {2, 2}, {3, 2}}));
  CHECK(f == formula_catalog("heisenberg_subring").function());
}

TEST_CASE("substitution commutes with expansion") {
  const Assignment heis{{0, 1}, {1, 1}, {2, 1}, {0, 0}};
  const auto sys = heisenberg_system();
  const int K = 4;
  const auto f = substitute(rational_form(sys), heis);
  // every term of Y-degree <= K has coordinates <= K
  const auto collected = substitute(brute_series(sys, K, false), heis);
  for (std::int64_t p : {2, 3}) {
    const auto series = expand_series(f, p, K);
    const auto at_p = collected.at_x(p);
    for (int k = 0; k <= K; ++k) {
      auto it = at_p.find(k);
      CHECK(series[k] == (it == at_p.end() ? Rational(0) : it->second));
    }
  }
  // identity-like assignment on the stanley system keeps all information in two variables
  const Assignment id{{1, 0}, {0, 1}, {1, 1}, {0, 1}};
  const auto s = substitute(rational_form(stanley()), id);
  const auto collected2 = substitute(brute_series(stanley(), 6, false), id);
  const auto series2 = expand_series(s, 5, 3);
  const auto at5 = collected2.at_x(5);
  for (int k = 0; k <= 3; ++k) CHECK(series2[k] == (at5.count(k) ? at5.at(k) : Rational(0)));
}

TEST_CASE("empty system substitutions") {
  const auto f = substitute(rational_form(empty_system(1)), {{0, 1}});
  CHECK(f == zp_factor(0, 1));
  CHECK_THROWS_AS(substitute(rational_form(empty_system(1)), {{0, 0}}), PoleError);
  CHECK_THROWS_AS(substitute(rational_form(empty_system(2)), {{0, 1}}), MalformedInput);
}

TEST_CASE("minimum-of-forms series") {
  const auto diag = minform_series({{{1}}}, 1, 5, false);
  for (const auto& [e, c] : diag.terms) CHECK(e[0] == e[1]);
  CHECK(diag.terms.size() == 6);

  const auto two = minform_series({{{1, 0}, {0, 1}}}, 2, 4, false);
  CHECK(two.terms.at({2, 3, 2}) == 1);

  // L(n) = 2n encoded as the cone k = 2n with the same strict/non-strict series
  const auto sys = DiophantineConeSystem::equalities({{2, -1}}, 2);
  for (bool strict : {false, true}) {
    const auto mf = minform_series({{{2}}}, 1, 4, strict);
    MultiPolynomial from_cone;
    for (const auto& [e, c] : brute_series(sys, 8, strict).terms)
      if (e[0] <= 4) from_cone[e] = c;
    CHECK(mf.terms == from_cone);
  }
  CHECK(reciprocity_check(sys, 8).outcome == ReciprocityOutcome::pass);
  CHECK(extreme_rays(sys).dimension == 1);
}

TEST_CASE("malformed systems") {
  CHECK_THROWS_AS(DiophantineConeSystem::equalities({{1, 2}}, 3), MalformedInput);
  CHECK_THROWS_AS(DiophantineConeSystem({{1, 2}}, {}, 2), MalformedInput);
  CHECK_THROWS_AS(DiophantineConeSystem::equalities({}, 0), MalformedInput);
}

}
