#include <doctest.h>

#include "ringzeta/catalog.hpp"
#include "ringzeta/cones.hpp"
#include "ringzeta/coxeter.hpp"
#include "ringzeta/latticezeta.hpp"
#include "ringzeta/repzeta.hpp"

using namespace ringzeta;

namespace {

LocalDirichletTruncation brute(const std::string& ring, std::int64_t p, int K, CountMode mode) {
  return count(catalog_algebra(ring), p, K, mode, {.threads = 4});
}

}  // namespace

TEST_SUITE("agreement") {

TEST_CASE("abelian lattices against the product of zeta factors") {
  for (int n = 1; n <= 3; ++n)
    for (std::int64_t p : {2, 3})
      CHECK(brute("abelian(" + std::to_string(n) + ")", p, 3, CountMode::sublattices) == expand(zeta_Zn(n), p, 3));
}

TEST_CASE("componentwise multiplication: which formula counts what") {
  for (std::int64_t p : {2, 3}) {
    CAPTURE(p);
    CHECK(brute("componentwise(2)", p, 6, CountMode::subrings) ==
          expand(formula_catalog("componentwise_2_subring").function(), p, 6));
    CHECK(brute("componentwise(2)", p, 6, CountMode::ideals) ==
          expand(formula_catalog("componentwise_ideal(2)").function(), p, 6));
    CHECK(brute("componentwise(3)", p, 3, CountMode::ideals) ==
          expand(formula_catalog("componentwise_ideal(3)").function(), p, 3));
    CHECK_FALSE(brute("componentwise(2)", p, 3, CountMode::subrings) ==
                expand(formula_catalog("componentwise_ideal(2)").function(), p, 3));
  }
}

TEST_CASE("heisenberg subrings and ideals") {
  for (std::int64_t p : {2, 3}) {
    CHECK(brute("heisenberg", p, 3, CountMode::subrings) == expand(formula_catalog("heisenberg_subring").function(), p, 3));
    CHECK(brute("heisenberg", p, 3, CountMode::ideals) == expand(formula_catalog("heisenberg_ideal").function(), p, 3));
  }
  CHECK(brute("free_nilpotent_2_d(2)", 3, 3, CountMode::subrings) == brute("heisenberg", 3, 3, CountMode::subrings));
}

TEST_CASE("sl2 is not uniform at 2") {
  CHECK(brute("sl2", 2, 3, CountMode::subrings) == expand(formula_catalog("sl2_two").function(), 2, 3));
  CHECK_FALSE(brute("sl2", 2, 3, CountMode::subrings) == expand(formula_catalog("sl2_odd").function(), 2, 3));
  CHECK(brute("sl2", 3, 3, CountMode::subrings) == expand(formula_catalog("sl2_odd").function(), 3, 3));
}

TEST_CASE("free class-2 nilpotent ring on three generators at p = 2") {
  CHECK(brute("free_nilpotent_2_d(3)", 2, 2, CountMode::subrings) ==
        expand(formula_catalog("free_nilpotent_2_3_subring").function(), 2, 2));
}

TEST_CASE("the elliptic-curve ring: ideals agree at small depth") {
  const auto f = formula_catalog("dusautoy_normal");
  const auto counted = brute("dusautoy_ec", 2, 2, CountMode::ideals);
  CHECK(counted == f.hybrid().expand(2, 2, evaluate_weights(f.weights, 2)));
  CHECK(counted == expand(zeta_Zn(6), 2, 2));
}

TEST_CASE("cone substitution, lattice counts and the catalog agree on the heisenberg factor") {
  const DiophantineConeSystem sys({{-1, -1, 1}}, {RowKind::less_equal}, 3);
  const auto f = substitute(rational_form(sys), {{0, 1}, {1, 1}, {2, 1}, {0, 0}});
  for (std::int64_t p : {2, 3, 5}) CHECK(expand(f, p, 3) == brute("heisenberg", p, 3, CountMode::subrings));
}

TEST_CASE("assembled abelian family against lattice counts") {
  for (int n = 2; n <= 3; ++n) {
    const auto W = ip_assemble(abelian_family(n), n) * zp_factor(0, n);
    for (std::int64_t p : {2, 3}) CHECK(expand(W, p, 3) == brute("abelian(" + std::to_string(n) + ")", p, 3, CountMode::sublattices));
  }
}

TEST_CASE("representation counts of the free class-2 ring are stable across thread counts and primes") {
  const auto pres = catalog_presentation("free_nilpotent_2_d(2)");
  for (std::int64_t p : {3, 5}) CHECK(rep_zeta_class2(pres, p, 3) == rep_zeta_class2(catalog_presentation("heisenberg"), p, 3));
}

}
