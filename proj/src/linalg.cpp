#include "ringzeta/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace ringzeta::linalg {

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

std::vector<std::size_t> rref(RatMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, r);
    const Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(const RatMatrix& m) {
  RatMatrix copy = m;
  return rref(copy).size();
}

std::size_t rank(const IntMatrix& m) { return rank(to_rational(m)); }

Rational determinant(RatMatrix m) {
  if (m.rows() != m.cols()) throw ContractError("determinant of a non-square matrix");
  Rational det = 1;
  const std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      m.swap_rows(p, c);
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c) == 0) continue;
      const Rational f = m(i, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw ContractError("inverse of a non-square matrix");
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  auto piv = rref(aug);
  if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
  RatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

std::vector<Integer> primitive(std::vector<Integer> v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  if (g == 0 || g == 1) return v;
  for (auto& x : v) x /= g;
  return v;
}

std::vector<std::vector<Integer>> kernel_basis(const IntMatrix& m) {
  RatMatrix r = to_rational(m);
  const auto piv = rref(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : piv) is_pivot[c] = true;
  std::vector<std::vector<Integer>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(m.cols(), Rational(0));
    v[free] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -r(i, free);
    Integer l = 1;
    for (const auto& x : v) l = lcm(l, x.get_den());
    std::vector<Integer> iv(m.cols());
    for (std::size_t j = 0; j < v.size(); ++j) iv[j] = Rational(v[j] * l).get_num();
    basis.push_back(primitive(std::move(iv)));
  }
  return basis;
}

namespace {

// Column operations on a copy of m, mirrored into u, until m*u is in column echelon form.
// Returns the number of nonzero (pivot) columns; they come first.
std::size_t column_echelon(IntMatrix& m, IntMatrix& u) {
  const std::size_t cols = m.cols();
  std::size_t pivot_col = 0;
  for (std::size_t r = 0; r < m.rows() && pivot_col < cols; ++r) {
    // Euclid on the entries of row r among columns >= pivot_col.
    while (true) {
      std::size_t best = cols;
      for (std::size_t c = pivot_col; c < cols; ++c) {
        if (m(r, c) == 0) continue;
        if (best == cols || abs(m(r, c)) < abs(m(r, best))) best = c;
      }
      if (best == cols) break;
      m.swap_cols(pivot_col, best);
      u.swap_cols(pivot_col, best);
      bool done = true;
      for (std::size_t c = pivot_col + 1; c < cols; ++c) {
        if (m(r, c) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), m(r, c).get_mpz_t(), m(r, pivot_col).get_mpz_t());
        for (std::size_t i = 0; i < m.rows(); ++i) m(i, c) -= q * m(i, pivot_col);
        for (std::size_t i = 0; i < u.rows(); ++i) u(i, c) -= q * u(i, pivot_col);
        if (m(r, c) != 0) done = false;
      }
      if (done) {
        ++pivot_col;
        break;
      }
    }
  }
  return pivot_col;
}

}  // namespace

std::vector<std::vector<Integer>> integer_kernel(const IntMatrix& m) {
  IntMatrix work = m;
  IntMatrix u = IntMatrix::identity(m.cols());
  const std::size_t r = column_echelon(work, u);
  std::vector<std::vector<Integer>> basis;
  for (std::size_t c = r; c < m.cols(); ++c) {
    std::vector<Integer> v(m.cols());
    for (std::size_t i = 0; i < m.cols(); ++i) v[i] = u(i, c);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Rational>> solve_in_row_space(const RatMatrix& basis,
                                                        const std::vector<Rational>& target) {
  // Solve a * B = t  <=>  B^T a^T = t^T.
  const std::size_t k = basis.rows(), n = basis.cols();
  RatMatrix aug(n, k + 1);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < k; ++i) aug(j, i) = basis(i, j);
    aug(j, k) = target[j];
  }
  const auto piv = rref(aug);
  if (!piv.empty() && piv.back() == k) return std::nullopt;
  std::vector<Rational> a(k, Rational(0));
  for (std::size_t i = 0; i < piv.size(); ++i) a[piv[i]] = aug(i, k);
  return a;
}

SmithDecomposition smith_normal_form(const IntMatrix& a) {
  const std::size_t rows = a.rows(), cols = a.cols();
  IntMatrix d = a;
  IntMatrix u = IntMatrix::identity(rows);
  IntMatrix v = IntMatrix::identity(cols);

  auto row_combine = [&](std::size_t target, std::size_t source, const Integer& q) {
    for (std::size_t j = 0; j < cols; ++j) d(target, j) -= q * d(source, j);
    for (std::size_t j = 0; j < rows; ++j) u(target, j) -= q * u(source, j);
  };
  auto col_combine = [&](std::size_t target, std::size_t source, const Integer& q) {
    for (std::size_t i = 0; i < rows; ++i) d(i, target) -= q * d(i, source);
    for (std::size_t i = 0; i < cols; ++i) v(i, target) -= q * v(i, source);
  };

  const std::size_t n = std::min(rows, cols);
  for (std::size_t t = 0; t < n; ++t) {
    while (true) {
      // Bring the smallest nonzero entry of the trailing block to (t, t).
      std::size_t bi = rows, bj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (d(i, j) != 0 && (bi == rows || abs(d(i, j)) < abs(d(bi, bj)))) {
            bi = i;
            bj = j;
          }
      if (bi == rows) break;
      d.swap_rows(t, bi);
      u.swap_rows(t, bi);
      d.swap_cols(t, bj);
      v.swap_cols(t, bj);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (d(i, t) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), d(i, t).get_mpz_t(), d(t, t).get_mpz_t());
        row_combine(i, t, q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (d(t, j) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), d(t, j).get_mpz_t(), d(t, t).get_mpz_t());
        col_combine(j, t, q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // Divisibility: pivot must divide the whole trailing block.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (d(i, j) % d(t, t) != 0) {
            // Fold row i into row t and retry.
            row_combine(t, i, Integer(-1));
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (d(t, t) < 0) {
      for (std::size_t j = 0; j < cols; ++j) d(t, j) = -d(t, j);
      for (std::size_t j = 0; j < rows; ++j) u(t, j) = -u(t, j);
    }
  }
  return {u, d, v};
}

IntMatrix hermite_normal_form(const IntMatrix& a) {
  IntMatrix h = a;
  const std::size_t rows = h.rows(), cols = h.cols();
  std::size_t r = 0;
  std::vector<std::size_t> pivot_cols;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    while (true) {
      std::size_t best = rows;
      for (std::size_t i = r; i < rows; ++i)
        if (h(i, c) != 0 && (best == rows || abs(h(i, c)) < abs(h(best, c)))) best = i;
      if (best == rows) break;
      h.swap_rows(r, best);
      bool done = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (h(i, c) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(r, c).get_mpz_t());
        for (std::size_t j = c; j < cols; ++j) h(i, j) -= q * h(r, j);
        if (h(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (r < rows && h(r, c) != 0) {
      if (h(r, c) < 0)
        for (std::size_t j = c; j < cols; ++j) h(r, j) = -h(r, j);
      pivot_cols.push_back(c);
      ++r;
    }
  }
  // Reduce entries above each pivot.
  for (std::size_t k = 0; k < pivot_cols.size(); ++k) {
    const std::size_t c = pivot_cols[k];
    for (std::size_t i = 0; i < k; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(k, c).get_mpz_t());
      if (q == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) h(i, j) -= q * h(k, j);
    }
  }
  IntMatrix out(pivot_cols.size(), cols);
  for (std::size_t i = 0; i < pivot_cols.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = h(i, j);
  return out;
}

}  // namespace ringzeta::linalg
