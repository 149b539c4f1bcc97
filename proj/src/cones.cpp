#include "ringzeta/cones.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include "ringzeta/errors.hpp"
#include "ringzeta/linalg.hpp"

namespace ringzeta {

using linalg::IntMatrix;
using linalg::RatMatrix;

std::string to_string(const Exponent& e) {
  std::string s = "(";
  for (std::size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + std::to_string(e[i]);
  return s + ")";
}

DiophantineConeSystem::DiophantineConeSystem(std::vector<std::vector<std::int64_t>> phi, std::vector<RowKind> kinds,
                                             int variables)
    : m_(variables), phi_(std::move(phi)), kinds_(std::move(kinds)) {
  if (m_ < 1) throw MalformedInput("a cone system needs at least one variable");
  if (kinds_.size() != phi_.size()) throw MalformedInput("one row kind per row is required");
  int slacks = 0;
  for (std::size_t i = 0; i < phi_.size(); ++i) {
    if (static_cast<int>(phi_[i].size()) != m_) throw MalformedInput("row " + std::to_string(i + 1) + " has wrong length");
    if (kinds_[i] == RowKind::less_equal) slack_.push_back(m_ + slacks++);
  }
  int s = 0;
  for (std::size_t i = 0; i < phi_.size(); ++i) {
    std::vector<std::int64_t> row = phi_[i];
    row.resize(m_ + slacks, 0);
    if (kinds_[i] == RowKind::less_equal) row[m_ + s++] = 1;
    matrix_.push_back(std::move(row));
  }
  if (!matrix_.empty()) rank_ = linalg::rank(IntMatrix::from_rows(matrix_, static_cast<std::size_t>(this->variables())));
}

DiophantineConeSystem DiophantineConeSystem::equalities(std::vector<std::vector<std::int64_t>> phi, int variables) {
  std::vector<RowKind> kinds(phi.size(), RowKind::equality);
  return DiophantineConeSystem(std::move(phi), std::move(kinds), variables);
}

namespace {

void check_box(int dims, int B, const ConeGuard& guard) {
  if (dims > guard.max_variables) throw ResourceGuard("too many variables for brute force", dims, guard.max_variables);
  if (B > guard.max_bound) throw ResourceGuard("degree bound too large for brute force", B, guard.max_bound);
  Integer points = int_pow(Integer(B + 1), dims);
  if (points > guard.max_points) throw ResourceGuard("brute-force box too large", points, Integer(guard.max_points));
}

// Odometer over {lo..B}^dims.
void for_each_box_point(int dims, int lo, int B, const std::function<void(const std::vector<int>&)>& visit) {
  if (lo > B) return;
  std::vector<int> x(dims, lo);
  for (;;) {
    visit(x);
    int i = 0;
    for (; i < dims; ++i) {
      if (++x[i] <= B) break;
      x[i] = lo;
    }
    if (i == dims) return;
  }
}

void add_term(MultiPolynomial& p, const Exponent& e, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = p.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) p.erase(it);
  }
}

MultiPolynomial multiply(const MultiPolynomial& a, const MultiPolynomial& b) {
  MultiPolynomial r;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      Exponent e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      add_term(r, e, ca * cb);
    }
  return r;
}

MultiPolynomial one_minus(const Exponent& r) {
  MultiPolynomial p;
  add_term(p, Exponent(r.size(), 0), 1);
  add_term(p, r, -1);
  return p;
}

RatMatrix rational_rows(const std::vector<Exponent>& rows, const std::vector<int>& pick, std::size_t cols) {
  RatMatrix m(pick.size(), cols);
  for (std::size_t i = 0; i < pick.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[pick[i]][j];
  return m;
}

std::size_t rank_of(const std::vector<Exponent>& rays, const std::vector<int>& pick) {
  if (pick.empty()) return 0;
  return linalg::rank(rational_rows(rays, pick, rays.front().size()));
}

// Facets of the cone spanned by rays[face], as sorted index sets.
std::set<std::vector<int>> facets_of(const std::vector<Exponent>& rays, const std::vector<int>& face) {
  const std::size_t n = rays.front().size();
  RatMatrix r = rational_rows(rays, face, n);
  const auto coords = linalg::rref(r);
  const std::size_t d = coords.size();
  // Coordinates `coords` restrict injectively to the span of the face.
  std::vector<std::vector<Integer>> proj(face.size(), std::vector<Integer>(d));
  for (std::size_t i = 0; i < face.size(); ++i)
    for (std::size_t j = 0; j < d; ++j) proj[i][j] = rays[face[i]][coords[j]];

  std::set<std::vector<int>> facets;
  std::vector<int> choose(d - 1);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
    if (depth == d - 1) {
      IntMatrix sub(d - 1, d);
      for (std::size_t i = 0; i < d - 1; ++i)
        for (std::size_t j = 0; j < d; ++j) sub(i, j) = proj[choose[i]][j];
      const auto ker = linalg::kernel_basis(sub);
      if (ker.size() != 1) return;
      int sign = 0;
      std::vector<int> zero;
      for (std::size_t i = 0; i < face.size(); ++i) {
        Integer v = 0;
        for (std::size_t j = 0; j < d; ++j) v += ker[0][j] * proj[i][j];
        const int s = sgn(v);
        if (s == 0) zero.push_back(face[i]);
        else if (sign == 0) sign = s;
        else if (s != sign) return;
      }
      facets.insert(zero);
      return;
    }
    for (std::size_t i = start; i < face.size(); ++i) {
      choose[depth] = static_cast<int>(i);
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
  return facets;
}

// Pulling triangulation with respect to the global index order.
void pull(const std::vector<Exponent>& rays, const std::vector<int>& face, std::vector<std::vector<int>>& out) {
  const std::size_t d = rank_of(rays, face);
  if (face.size() == d) {
    out.push_back(face);
    return;
  }
  const int apex = face.front();
  for (const auto& facet : facets_of(rays, face)) {
    if (std::binary_search(facet.begin(), facet.end(), apex)) continue;
    std::vector<std::vector<int>> sub;
    pull(rays, facet, sub);
    for (auto& s : sub) {
      s.push_back(apex);
      std::sort(s.begin(), s.end());
      out.push_back(std::move(s));
    }
  }
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

MultivariateSeriesTruncation brute_series(const DiophantineConeSystem& sys, int B, bool strict, const ConeGuard& guard) {
  const int m = sys.original_variables();
  check_box(m, B, guard);
  MultivariateSeriesTruncation out{sys.variables(), B, {}};
  const auto& rows = sys.original_rows();
  const auto& kinds = sys.row_kinds();
  for_each_box_point(m, strict ? 1 : 0, B, [&](const std::vector<int>& x) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      std::int64_t v = 0;
      for (int j = 0; j < m; ++j) v += rows[i][j] * x[j];
      if (kinds[i] == RowKind::equality ? v != 0 : v > (strict ? -1 : 0)) return;
    }
    Exponent e(x.begin(), x.end());
    e.resize(sys.variables(), 0);
    out.terms[e] = 1;
  });
  return out;
}

ExtremeRays extreme_rays(const DiophantineConeSystem& sys, int max_columns) {
  const int n = sys.variables();
  if (n > max_columns) throw ResourceGuard("support enumeration refused", int_pow(Integer(2), n), int_pow(Integer(2), max_columns));
  const auto& a = sys.matrix();
  std::set<Exponent> found;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> support;
    for (int j = 0; j < n; ++j)
      if (mask >> j & 1) support.push_back(j);
    IntMatrix sub(a.size(), support.size());
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < support.size(); ++j) sub(i, j) = static_cast<long>(a[i][support[j]]);
    const auto ker = linalg::kernel_basis(sub);
    if (ker.size() != 1) continue;
    const int sign = sgn(ker[0][0]);
    bool ok = sign != 0;
    for (const auto& x : ker[0]) ok = ok && sgn(x) == sign;
    if (!ok) continue;
    Exponent ray(n, 0);
    for (std::size_t j = 0; j < support.size(); ++j) ray[support[j]] = static_cast<int>(Integer(ker[0][j] * sign).get_si());
    found.insert(ray);
  }
  ExtremeRays out;
  out.rays.assign(found.begin(), found.end());
  std::vector<int> all(out.rays.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  out.dimension = static_cast<int>(rank_of(out.rays, all));
  return out;
}

std::vector<std::vector<int>> triangulate(const std::vector<Exponent>& rays) {
  std::vector<std::vector<int>> out;
  if (rays.empty()) return out;
  std::vector<int> all(rays.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  pull(rays, all, out);
  return out;
}

MultivariateRationalForm rational_form(const DiophantineConeSystem& sys) {
  const int n = sys.variables();
  const ExtremeRays er = extreme_rays(sys);
  MultivariateRationalForm form{n, {}, er.rays};
  if (er.rays.empty()) {
    form.numerator[Exponent(n, 0)] = 1;
    return form;
  }
  // The solution cone lies in the non-negative orthant, so it is always pointed.
  const auto& rays = er.rays;
  const std::size_t d = er.dimension;
  const auto simplices = triangulate(rays);

  // Lattice Z^n intersected with the span of the cone.
  IntMatrix ray_matrix(rays.size(), n);
  for (std::size_t i = 0; i < rays.size(); ++i)
    for (int j = 0; j < n; ++j) ray_matrix(i, j) = rays[i][j];
  const auto complement = linalg::kernel_basis(ray_matrix);
  IntMatrix w(complement.size(), n);
  for (std::size_t i = 0; i < complement.size(); ++i)
    for (int j = 0; j < n; ++j) w(i, j) = complement[i][j];
  const auto lattice = linalg::integer_kernel(w);
  if (lattice.size() != d) throw InternalConsistency("lattice basis has the wrong rank");
  RatMatrix basis(d, n);
  for (std::size_t i = 0; i < d; ++i)
    for (int j = 0; j < n; ++j) basis(i, j) = lattice[i][j];

  // Generic interior point deciding which facets each simplex keeps.
  std::mt19937_64 gen(12345);
  std::vector<std::vector<Rational>> lambdas;
  for (int attempt = 0;; ++attempt) {
    if (attempt == 100) throw InternalConsistency("no generic point found for the half-open decomposition");
    std::vector<Rational> q(n, Rational(0));
    for (const auto& r : rays) {
      const long wgt = std::uniform_int_distribution<long>(1, 1'000'000)(gen);
      for (int j = 0; j < n; ++j) q[j] += Rational(wgt * r[j]);
    }
    lambdas.clear();
    bool generic = true;
    for (const auto& s : simplices) {
      const auto lam = linalg::solve_in_row_space(rational_rows(rays, s, n), q);
      if (!lam) throw InternalConsistency("interior point outside a simplex span");
      for (const auto& x : *lam) generic = generic && x != 0;
      lambdas.push_back(*lam);
    }
    if (generic) break;
  }

  for (std::size_t si = 0; si < simplices.size(); ++si) {
    const auto& s = simplices[si];
    IntMatrix A(d, d);
    for (std::size_t i = 0; i < d; ++i) {
      std::vector<Rational> r(n);
      for (int j = 0; j < n; ++j) r[j] = rays[s[i]][j];
      const auto coeff = linalg::solve_in_row_space(basis, r);
      if (!coeff) throw InternalConsistency("ray outside the lattice span");
      for (std::size_t j = 0; j < d; ++j) A(i, j) = to_integer((*coeff)[j]);
    }
    const auto snf = linalg::smith_normal_form(A);
    const auto v_inv = *linalg::inverse(linalg::to_rational(snf.right));
    const auto a_inv = *linalg::inverse(linalg::to_rational(A));
    std::vector<Integer> sizes(d);
    for (std::size_t i = 0; i < d; ++i) sizes[i] = snf.diagonal(i, i);

    MultiPolynomial points;
    std::vector<Integer> e(d, 0);
    for (;;) {
      // c = e V^{-1}, mu = c A^{-1}
      std::vector<Rational> c(d, Rational(0)), mu(d, Rational(0));
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) c[j] += Rational(e[i]) * v_inv(i, j);
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) mu[j] += c[i] * a_inv(i, j);
      for (std::size_t j = 0; j < d; ++j) {
        mu[j] -= Rational(floor_div(mu[j].get_num(), mu[j].get_den()));
        if (mu[j] == 0 && lambdas[si][j] < 0) mu[j] = 1;
      }
      Exponent x(n);
      for (int k = 0; k < n; ++k) {
        Rational acc = 0;
        for (std::size_t j = 0; j < d; ++j) acc += mu[j] * rays[s[j]][k];
        x[k] = static_cast<int>(to_integer(acc).get_si());
      }
      add_term(points, x, 1);
      std::size_t i = 0;
      for (; i < d; ++i) {
        if (++e[i] < sizes[i]) break;
        e[i] = 0;
      }
      if (i == d) break;
    }
    for (std::size_t r = 0; r < rays.size(); ++r)
      if (!std::binary_search(s.begin(), s.end(), static_cast<int>(r))) points = multiply(points, one_minus(rays[r]));
    for (const auto& [ex, c] : points) add_term(form.numerator, ex, c);
  }
  return form;
}

MultivariateSeriesTruncation expand(const MultivariateRationalForm& form, const DiophantineConeSystem& sys, int B) {
  const int m = sys.original_variables();
  auto inside = [&](const Exponent& x) {
    for (int j = 0; j < m; ++j)
      if (x[j] > B) return false;
    return true;
  };
  MultiPolynomial s;
  for (const auto& [e, c] : form.numerator)
    if (inside(e)) add_term(s, e, c);
  for (const auto& r : form.rays) {
    if (std::none_of(r.begin(), r.begin() + m, [](int x) { return x > 0; }))
      throw InternalConsistency("ray " + to_string(r) + " has no positive original coordinate");
    MultiPolynomial next;
    for (const auto& [e, c] : s)
      for (Exponent x = e; inside(x);) {
        add_term(next, x, c);
        for (std::size_t j = 0; j < x.size(); ++j) x[j] += r[j];
      }
    s = std::move(next);
  }
  MultivariateSeriesTruncation out{form.variables, B, {}};
  for (const auto& [e, c] : s) {
    if (std::any_of(e.begin(), e.end(), [](int x) { return x < 0; }))
      throw InternalConsistency("expansion left a term with a negative exponent " + to_string(e));
    Exponent key = e;
    for (int col : sys.slack_columns()) key[col] = 0;
    add_term(out.terms, key, c);
  }
  return out;
}

MultivariateRationalForm reciprocal_form(const MultivariateRationalForm& form, int dimension) {
  Exponent shift(form.variables, 0);
  for (const auto& r : form.rays)
    for (int j = 0; j < form.variables; ++j) shift[j] += r[j];
  const bool negate = (form.rays.size() + static_cast<std::size_t>(dimension)) % 2 == 1;
  MultivariateRationalForm out{form.variables, {}, form.rays};
  for (const auto& [e, c] : form.numerator) {
    Exponent x(form.variables);
    for (int j = 0; j < form.variables; ++j) x[j] = shift[j] - e[j];
    add_term(out.numerator, x, negate ? Integer(-c) : c);
  }
  return out;
}

std::string to_string(ReciprocityOutcome o) {
  switch (o) {
    case ReciprocityOutcome::pass: return "pass";
    case ReciprocityOutcome::fail: return "fail";
    case ReciprocityOutcome::inconclusive: return "inconclusive";
  }
  return "?";
}

ReciprocityVerdict reciprocity_check(const DiophantineConeSystem& sys, int B) {
  const auto strict = brute_series(sys, B, true);
  const auto er = extreme_rays(sys);
  if (strict.terms.empty())
    return {ReciprocityOutcome::inconclusive, er.dimension, "no strictly positive solution with coordinates <= " + std::to_string(B)};
  const auto form = rational_form(sys);
  const auto predicted = expand(reciprocal_form(form, er.dimension), sys, B);
  if (predicted.terms == strict.terms)
    return {ReciprocityOutcome::pass, er.dimension, std::to_string(strict.terms.size()) + " strict solutions match"};
  for (const auto& [e, c] : strict.terms) {
    auto it = predicted.terms.find(e);
    if (it == predicted.terms.end() || it->second != c)
      return {ReciprocityOutcome::fail, er.dimension, "mismatch at " + to_string(e)};
  }
  return {ReciprocityOutcome::fail, er.dimension, "reciprocal form has extra terms"};
}

namespace {

Monomial image(const Exponent& e, const Assignment& a) {
  Monomial m{0, 0};
  for (std::size_t i = 0; i < e.size(); ++i) {
    m.first += e[i] * a[i].first;
    m.second += e[i] * a[i].second;
  }
  return m;
}

void check_assignment(int variables, const Assignment& a) {
  if (static_cast<int>(a.size()) != variables)
    throw MalformedInput("assignment needs one monomial per variable (" + std::to_string(variables) + ")");
}

}  // namespace

BivariateRationalFunction substitute(const MultivariateRationalForm& form, const Assignment& assignment) {
  check_assignment(form.variables, assignment);
  BivariatePolynomial num;
  for (const auto& [e, c] : form.numerator) {
    const auto [a, b] = image(e, assignment);
    num.add_term(a, b, Rational(c));
  }
  std::vector<Monomial> den;
  for (const auto& r : form.rays) {
    const auto m = image(r, assignment);
    if (m == Monomial{0, 0}) throw PoleError("ray " + to_string(r) + " is sent to 1");
    den.push_back(m);
  }
  return BivariateRationalFunction(num, den);
}

BivariatePolynomial substitute(const MultivariateSeriesTruncation& series, const Assignment& assignment) {
  check_assignment(series.variables, assignment);
  BivariatePolynomial out;
  for (const auto& [e, c] : series.terms) {
    const auto [a, b] = image(e, assignment);
    out.add_term(a, b, Rational(c));
  }
  return out;
}

MultivariateSeriesTruncation minform_series(const std::vector<std::vector<LinearForm>>& forms, int r, int B,
                                            bool strict, const ConeGuard& guard) {
  check_box(r, B, guard);
  const int s = static_cast<int>(forms.size());
  for (const auto& group : forms) {
    if (group.empty()) throw MalformedInput("each Y variable needs at least one linear form");
    for (const auto& f : group)
      if (static_cast<int>(f.size()) != r) throw MalformedInput("linear form has wrong length");
  }
  MultivariateSeriesTruncation out{r + s, B, {}};
  for_each_box_point(r, strict ? 1 : 0, B, [&](const std::vector<int>& n) {
    Exponent e(n.begin(), n.end());
    for (const auto& group : forms) {
      std::int64_t lo = 0;
      for (std::size_t t = 0; t < group.size(); ++t) {
        std::int64_t v = 0;
        for (int j = 0; j < r; ++j) v += group[t][j] * n[j];
        lo = t == 0 ? v : std::min(lo, v);
      }
      e.push_back(static_cast<int>(lo));
    }
    add_term(out.terms, e, 1);
  });
  return out;
}

}  // namespace ringzeta
