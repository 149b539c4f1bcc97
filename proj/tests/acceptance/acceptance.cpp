// Runs the twelve acceptance checks and prints one PASS/FAIL line per check.
// Exit status is nonzero if any check fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ringzeta/algebra.hpp"
#include "ringzeta/catalog.hpp"
#include "ringzeta/cones.hpp"
#include "ringzeta/coxeter.hpp"
#include "ringzeta/errors.hpp"
#include "ringzeta/igusa.hpp"
#include "ringzeta/latticezeta.hpp"
#include "ringzeta/polynomial.hpp"
#include "ringzeta/ratfun.hpp"
#include "ringzeta/repzeta.hpp"

using namespace ringzeta;

namespace {

constexpr int threads = 4;
constexpr double euler_tolerance = 0.02;

// Collects failures for one criterion; the first few are printed.
struct Outcome {
  int checks = 0;
  std::vector<std::string> failures;
  std::string note;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
  }
};

LocalDirichletTruncation brute(const StructureConstantAlgebra& alg, std::int64_t p, int K, CountMode mode) {
  return count(alg, p, K, mode, {.threads = threads});
}

LocalDirichletTruncation brute(const std::string& ring, std::int64_t p, int K, CountMode mode) {
  return brute(catalog_algebra(ring), p, K, mode);
}

std::string at(const std::string& what, std::int64_t p, int K) {
  return what + " p=" + std::to_string(p) + " K=" + std::to_string(K);
}

BivariateRationalFunction catalog_function(const std::string& name) { return formula_catalog(name).function(); }

void abelian_self_test(Outcome& o) {
  for (int n = 1; n <= 4; ++n)
    for (std::int64_t p : {2, 3}) {
      const auto ring = "abelian(" + std::to_string(n) + ")";
      o.expect(brute(ring, p, 3, CountMode::sublattices) == expand(zeta_Zn(n), p, 3), at(ring, p, 3));
    }
  for (int n = 1; n <= 3; ++n) {
    const auto ring = "abelian(" + std::to_string(n) + ")";
    o.expect(brute(ring, 2, 4, CountMode::sublattices) == expand(zeta_Zn(n), 2, 4), at(ring, 2, 4));
  }
}

void heisenberg(Outcome& o) {
  const auto ideal = zp_factor(0, 1) * zp_factor(1, 1) * zp_factor(2, 3);
  for (std::int64_t p : {2, 3, 5}) {
    o.expect(brute("heisenberg", p, 3, CountMode::subrings) == expand(catalog_function("heisenberg_subring"), p, 3),
             at("subrings", p, 3));
    const auto ideals = brute("heisenberg", p, 3, CountMode::ideals);
    o.expect(ideals == expand(ideal, p, 3), at("ideals", p, 3));
    o.expect(ideals == expand(catalog_function("heisenberg_ideal"), p, 3), at("catalog ideals", p, 3));
  }
}

void sl2(Outcome& o) {
  for (std::int64_t p : {3, 5})
    o.expect(brute("sl2", p, 3, CountMode::subrings) == expand(catalog_function("sl2_odd"), p, 3), at("sl2_odd", p, 3));
  const auto two = brute("sl2", 2, 3, CountMode::subrings);
  o.expect(two == expand(catalog_function("sl2_two"), 2, 3), at("sl2_two", 2, 3));
  o.expect(!(two == expand(catalog_function("sl2_odd"), 2, 3)), "sl2_odd must differ at p=2");
}

void free_nilpotent(Outcome& o) {
  const auto f = catalog_function("free_nilpotent_2_3_subring");
  for (std::int64_t p : {2, 3})
    o.expect(brute("free_nilpotent_2_d(3)", p, 2, CountMode::subrings) == expand(f, p, 2), at("F23", p, 2));
}

void three_dimensional(Outcome& o) {
  const std::vector<std::pair<std::string, BivariateRationalFunction>> rings{
      {"abelian(3)", zeta_Zn(3)},
      {"heisenberg", catalog_function("heisenberg_subring")},
      {"sl2", catalog_function("sl2_odd")}};
  for (const auto& [ring, formula] : rings)
    for (std::int64_t p : {3, 5}) {
      const auto alg = catalog_algebra(ring);
      const auto assembled = theorem3d_zeta(alg, p, 0, 2, FormSource::base, {.threads = threads});
      o.expect(assembled == brute(alg, p, 2, CountMode::subrings), at(ring + " assembly vs count", p, 2));
      o.expect(assembled == expand(formula, p, 2), at(ring + " assembly vs formula", p, 2));
    }
  const auto h = catalog_algebra("heisenberg");
  o.expect(theorem3d_zeta(h, 3, 1, 2, FormSource::base, {.threads = threads}) ==
               brute(scale(h, 3, 1), 3, 2, CountMode::subrings),
           "scale(heisenberg,3,1) i=1");
}

void coxeter(Outcome& o) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& I : subsets_of_ranks(n))
      o.expect(descent_sum(n, I) == gaussian_binomial(n, I), "descent sum n=" + std::to_string(n) + " I=" + to_string(I));
  for (auto [n, q] : std::vector<std::pair<int, std::int64_t>>{{3, 2}, {3, 3}, {4, 2}})
    for (const auto& I : subsets_of_ranks(n))
      o.expect(Rational(flag_count(n, I, q)) == gaussian_binomial(n, I).evaluate(Rational(q)),
               "flags n=" + std::to_string(n) + " q=" + std::to_string(q) + " I=" + to_string(I));
  for (int n = 1; n <= 7; ++n) {
    const auto v = longest_element_identities(n);
    o.expect(v.pass, "longest element n=" + std::to_string(n) + ": " + v.detail);
  }
}

std::vector<std::pair<std::string, DiophantineConeSystem>> cone_fixtures() {
  const auto eq = DiophantineConeSystem::equalities;
  return {
      {"stanley", eq({{1, 1, -1, -1}}, 4)},
      {"empty1", eq({}, 1)},
      {"empty2", eq({}, 2)},
      {"empty3", eq({}, 3)},
      {"empty4", eq({}, 4)},
      {"diagonal", eq({{1, -1}}, 2)},
      {"zero_only", eq({{1, 1}}, 2)},
      {"weighted", eq({{1, 2, -1, -1}}, 4)},
      {"three_by_three", eq({{1, 1, 1, -1, -1, -1}}, 6)},
      {"two_rows", eq({{1, 1, -1, -1, 0}, {0, 1, 0, -1, 1}}, 5)},
      {"non_unimodular", eq({{2, 3, -5}}, 3)},
      {"heisenberg_slack", DiophantineConeSystem({{-1, -1, 1}}, {RowKind::less_equal}, 3)},
      {"halfplane", DiophantineConeSystem({{1, -2}}, {RowKind::less_equal}, 2)},
      {"mixed", DiophantineConeSystem({{1, 1, -1}, {1, -3, 0}}, {RowKind::equality, RowKind::less_equal}, 3)},
  };
}

void cones(Outcome& o) {
  for (const auto& [name, sys] : cone_fixtures())
    o.expect(expand(rational_form(sys), sys, 8) == brute_series(sys, 8, false), "expansion " + name);
  for (const auto& [name, sys] : cone_fixtures()) {
    if (name != "stanley" && name.rfind("empty", 0) != 0) continue;
    const auto v = reciprocity_check(sys, 6);
    o.expect(v.outcome == ReciprocityOutcome::pass, "reciprocity " + name + ": " + v.detail);
  }
  const DiophantineConeSystem heis({{-1, -1, 1}}, {RowKind::less_equal}, 3);
  o.expect(substitute(rational_form(heis), {{0, 1}, {1, 1}, {2, 1}, {0, 0}}) == catalog_function("heisenberg_subring"),
           "substitution gives the heisenberg factor");
}

void expect_funeq(Outcome& o, const std::string& name, const FunEqVerdict& v) {
  o.expect(v.pass, name + ": " + v.detail);
}

void functional_equations(Outcome& o) {
  for (int n = 1; n <= 6; ++n)
    expect_funeq(o, "zeta_Zn(" + std::to_string(n) + ")",
                 funeq_verdict(zeta_Zn(n), FunctionalEquation{n % 2 ? -1 : 1, n * (n - 1) / 2, n}));
  expect_funeq(o, "heisenberg_subring", funeq_verdict(catalog_function("heisenberg_subring"), FunctionalEquation{-1, 3, 3}));
  expect_funeq(o, "dusautoy_normal",
               hybrid_funeq_verdict(formula_catalog("dusautoy_normal").hybrid(), FunctionalEquation{-1, 36, 15}));
  expect_funeq(o, "dusautoy_rep", hybrid_funeq_verdict(formula_catalog("dusautoy_rep").hybrid(), FunctionalEquation{1, 3, 0}));
  expect_funeq(o, "heisenberg_rep", funeq_verdict(catalog_function("heisenberg_rep"), FunctionalEquation{1, 1, 0}));
  expect_funeq(o, "heisenberg_rep (d'=1)", theoremD_check(catalog_function("heisenberg_rep"), 1));
  expect_funeq(o, "dusautoy_rep (d'=3)", theoremD_check(formula_catalog("dusautoy_rep").hybrid(), 3));
}

void representations(Outcome& o) {
  const auto heis = catalog_presentation("heisenberg");
  for (std::int64_t p : {3, 5, 7}) {
    const LocalDirichletTruncation expected{p, {1, p - 1, p * (p - 1), p * p * (p - 1)}};
    o.expect(rep_zeta_class2(heis, p, 3, {.threads = threads}) == expected, at("heisenberg", p, 3));
  }
  const auto ec = catalog_presentation("dusautoy_ec");
  const auto formula = formula_catalog("dusautoy_rep");
  for (std::int64_t p : {3, 5, 7}) {
    const auto weights = evaluate_weights(formula.weights, p);
    o.expect(rep_zeta_class2(ec, p, 2, {.threads = threads}) == formula.hybrid().expand(p, 2, weights),
             at("dusautoy_ec", p, 2));
  }
  const auto curve = IntegerPolynomial::parse("y^2*z - x^3 + x*z^2", {"x", "y", "z"});
  const auto affine = IntegerPolynomial::parse("y^2 - x^3 + x", {"x", "y"});
  o.expect(point_count_affine(affine, 7) == 7, "c(7) = 7");
  o.expect(point_count_projective(ProjectivePlaneCurve(curve), 7) == 8, "b(7) = 8");
  o.expect(evaluate_weights(formula.weights, 7).at("b") == 8, "catalog weight b(7) = 8");
}

void dusautoy_ideals(Outcome& o) {
  const auto formula = formula_catalog("dusautoy_normal");
  const auto counted = brute("dusautoy_ec", 2, 2, CountMode::ideals);
  o.expect(counted == formula.hybrid().expand(2, 2, evaluate_weights(formula.weights, 2)), "hybrid p=2 K=2");
  o.expect(counted == expand(zeta_Zn(6), 2, 2), "Z_p^6 part p=2 K=2");
}

void euler_asymptotics(Outcome& o) {
  constexpr std::int64_t M = 100'000;
  const auto g = euler_product(provider_from(zeta_Zn(2)), M, M, threads);
  const double c = std::numbers::pi * std::numbers::pi / 12;
  const auto samples = asymptotic_ratio(g, 2, 0, c, {M});
  const double ratio = samples.back().ratio;
  std::ostringstream note;
  note << "ratio " << ratio << " at m=" << M;
  o.note = note.str();
  o.expect(std::abs(ratio - 1) < euler_tolerance, o.note);
}

using ModMatrix = std::vector<std::int64_t>;

ModMatrix multiply(const ModMatrix& a, const ModMatrix& b, int d, std::int64_t q) {
  ModMatrix c(d * d, 0);
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k)
      for (int j = 0; j < d; ++j) c[i * d + j] = (c[i * d + j] + a[i * d + k] * b[k * d + j]) % q;
  return c;
}

ModMatrix random_unimodular(std::mt19937_64& g, int d, std::int64_t p, std::int64_t q) {
  ModMatrix u(d * d, 0);
  for (int i = 0; i < d; ++i) u[i * d + i] = 1;
  std::uniform_int_distribution<std::int64_t> entry(0, q - 1), index(0, d - 1);
  for (int step = 0; step < 3 * d; ++step) {
    ModMatrix e(d * d, 0);
    for (int i = 0; i < d; ++i) e[i * d + i] = 1;
    const auto i = index(g), j = index(g);
    if (i == j) {
      std::int64_t unit;
      do unit = entry(g);
      while (unit % p == 0);
      e[i * d + i] = unit;
    } else {
      e[i * d + j] = entry(g);
    }
    u = multiply(u, e, d, q);
  }
  return u;
}

BivariateRationalFunction random_function(std::mt19937_64& g) {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(g); };
  BivariatePolynomial num;
  for (int t = pick(1, 5); t > 0; --t) num.add_term(pick(-3, 6), pick(-2, 6), Rational(pick(-9, 9), pick(1, 4)));
  std::vector<Monomial> den;
  for (int i = pick(0, 4); i > 0; --i) den.push_back({pick(0, 5), pick(1, 4)});
  return BivariateRationalFunction(num, den);
}

constexpr std::uint64_t seed_multiplicative = 555;
constexpr std::uint64_t seed_involution = 20240611;
constexpr std::uint64_t seed_smith = 2024;

void property_suites(Outcome& o) {
  {
    std::mt19937_64 g(seed_multiplicative);
    std::uniform_int_distribution<std::int64_t> pick(1, 30);
    const auto heis = euler_product(provider_from(catalog_function("heisenberg_subring")), 900, 900, threads);
    const auto z3 = euler_product(provider_from(zeta_Zn(3)), 900, 900, threads);
    for (int checked = 0; checked < 500;) {
      const auto m = pick(g), n = pick(g);
      if (std::gcd(m, n) != 1) continue;
      o.expect(heis[m * n] == heis[m] * heis[n] && z3[m * n] == z3[m] * z3[n],
               "multiplicativity m=" + std::to_string(m) + " n=" + std::to_string(n));
      ++checked;
    }
  }
  {
    std::mt19937_64 g(seed_involution);
    for (int trial = 0; trial < 300; ++trial) {
      const auto f = random_function(g);
      o.expect(invert_prime(invert_prime(f)) == f, "involution trial " + std::to_string(trial));
    }
  }
  {
    std::mt19937_64 g(seed_smith);
    for (int trial = 0; trial < 500; ++trial) {
      const std::int64_t p = trial % 2 ? 3 : 5;
      const int N = std::uniform_int_distribution<int>(1, 3)(g);
      const int d = std::uniform_int_distribution<int>(1, 4)(g);
      const std::int64_t q = checked_pow(p, N);
      ModMatrix a(d * d);
      for (auto& x : a)
        x = std::uniform_int_distribution<std::int64_t>(0, q - 1)(g) *
            checked_pow(p, std::uniform_int_distribution<int>(0, N)(g)) % q;
      const auto moved =
          multiply(multiply(random_unimodular(g, d, p, q), a, d, q), random_unimodular(g, d, p, q), d, q);
      o.expect(smith_type(a, d, p, N) == smith_type(moved, d, p, N), "smith trial " + std::to_string(trial));
    }
  }
  {
    const auto alg = catalog_algebra("sl2");
    const auto one = count(alg, 3, 3, CountMode::subrings, {.threads = 1});
    for (int t : {2, 3, 8})
      o.expect(count(alg, 3, 3, CountMode::subrings, {.threads = t}) == one, "threads=" + std::to_string(t));
    for (int k = 0; k <= 3; ++k) {
      Integer visited = 0;
      for (const auto& shard : compositions(k, 3)) for_each_in_shard(3, shard, [&](const HermiteSublattice&) { ++visited; });
      o.expect(visited == predicted_sublattice_count(3, 3, k), "shard total k=" + std::to_string(k));
    }
  }
  o.note = "seeds " + std::to_string(seed_multiplicative) + ", " + std::to_string(seed_involution) + ", " +
           std::to_string(seed_smith);
}

struct Criterion {
  int id;
  const char* name;
  std::function<void(Outcome&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "abelian self-test", abelian_self_test},
      {2, "heisenberg subrings and ideals", heisenberg},
      {3, "sl2 including p=2", sl2},
      {4, "free class-2 ring on three generators", free_nilpotent},
      {5, "three-dimensional assembly", three_dimensional},
      {6, "coxeter identities", coxeter},
      {7, "cones", cones},
      {8, "functional equations", functional_equations},
      {9, "representation zeta", representations},
      {10, "elliptic-curve ring ideals", dusautoy_ideals},
      {11, "euler product asymptotics (tol 2%)", euler_asymptotics},
      {12, "property suites", property_suites},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
      c.run(o);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = error.empty() && o.failures.empty();
    if (!pass) ++failed;
    std::printf("%s %2d %-40s %5d checks %8.2fs%s%s\n", pass ? "PASS" : "FAIL", c.id, c.name, o.checks, seconds,
                o.note.empty() ? "" : "  ", o.note.c_str());
    if (!error.empty()) std::printf("     error: %s\n", error.c_str());
    for (std::size_t i = 0; i < o.failures.size() && i < 5; ++i) std::printf("     failed: %s\n", o.failures[i].c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed ? 1 : 0;
}
