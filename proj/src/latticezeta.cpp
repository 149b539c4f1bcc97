#include "ringzeta/latticezeta.hpp"

#include <array>
#include <sstream>

#include "ringzeta/errors.hpp"
#include "ringzeta/linalg.hpp"
#include "ringzeta/parallel.hpp"

namespace ringzeta {

namespace {

constexpr int max_rank = 32;

void require_prime(std::int64_t p) {
  if (!is_prime(p)) throw MalformedInput("p = " + std::to_string(p) + " is not prime");
}

bool is_power_of(std::int64_t x, std::int64_t p) {
  if (x < 1) return false;
  while (x % p == 0) x /= p;
  return x == 1;
}

}  // namespace

HermiteSublattice::HermiteSublattice(std::int64_t p, int n, std::vector<std::int64_t> entries)
    : p_(p), n_(n), entries_(std::move(entries)) {
  require_prime(p);
  if (n < 1 || n > max_rank) throw MalformedInput("lattice rank out of range");
  if (static_cast<int>(entries_.size()) != n * n) throw MalformedInput("lattice matrix has wrong size");
  for (int i = 0; i < n; ++i) {
    if (!is_power_of((*this)(i, i), p)) throw MalformedInput("diagonal entry is not a power of p");
    for (int j = 0; j < n; ++j) {
      const std::int64_t x = (*this)(i, j);
      if (j < i && x != 0) throw MalformedInput("lattice matrix is not upper triangular");
      if (j > i && (x < 0 || x >= (*this)(j, j))) throw MalformedInput("off-diagonal entry not reduced");
    }
  }
}

HermiteSublattice HermiteSublattice::identity(std::int64_t p, int n) {
  std::vector<std::int64_t> e(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) e[i * n + i] = 1;
  return HermiteSublattice(p, n, std::move(e));
}

HermiteSublattice HermiteSublattice::canonicalize(std::int64_t p, const std::vector<std::vector<std::int64_t>>& rows) {
  require_prime(p);
  const int n = rows.empty() ? 0 : static_cast<int>(rows.front().size());
  if (n < 1) throw MalformedInput("no generators");
  linalg::IntMatrix g(rows.size(), n);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (static_cast<int>(rows[i].size()) != n) throw MalformedInput("ragged generator rows");
    for (int j = 0; j < n; ++j) g(i, j) = static_cast<long>(rows[i][j]);
  }
  if (linalg::rank(g) != static_cast<std::size_t>(n)) throw MalformedInput("generators do not span a full-rank lattice");
  // Index of the Z-span is the gcd of maximal minors; bound its p-part by the HNF diagonal.
  const linalg::IntMatrix h = linalg::hermite_normal_form(g);
  Integer index = 1;
  for (int i = 0; i < n; ++i) index *= h(i, i);
  int k = 0;
  const Integer pz = static_cast<long>(p);
  while (index % pz == 0) {
    index /= pz;
    ++k;
  }
  // Adding p^k Z^n leaves the Z_p-span unchanged and kills the prime-to-p part.
  const Integer pk = int_pow(pz, k);
  linalg::IntMatrix stacked(rows.size() + n, n);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < n; ++j) stacked(i, j) = g(i, j);
  for (int i = 0; i < n; ++i) stacked(rows.size() + i, i) = pk;
  const linalg::IntMatrix c = linalg::hermite_normal_form(stacked);
  std::vector<std::int64_t> e(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) e[i * n + j] = c(i, j).get_si();
  return HermiteSublattice(p, n, std::move(e));
}

std::vector<int> HermiteSublattice::diagonal_exponents() const {
  std::vector<int> m(n_);
  for (int i = 0; i < n_; ++i) m[i] = valuation((*this)(i, i), p_);
  return m;
}

int HermiteSublattice::index_exponent() const {
  int k = 0;
  for (int m : diagonal_exponents()) k += m;
  return k;
}

std::string to_string(const HermiteSublattice& lat) {
  std::ostringstream out;
  out << '[';
  for (int i = 0; i < lat.rank(); ++i) {
    out << (i ? ",[" : "[");
    for (int j = 0; j < lat.rank(); ++j) out << (j ? "," : "") << lat(i, j);
    out << ']';
  }
  out << ']';
  return out.str();
}

std::string to_string(CountMode mode) {
  switch (mode) {
    case CountMode::subrings: return "subrings";
    case CountMode::ideals: return "ideals";
    case CountMode::sublattices: return "sublattices";
  }
  return "?";
}

CountMode parse_count_mode(const std::string& text) {
  if (text == "subrings") return CountMode::subrings;
  if (text == "ideals") return CountMode::ideals;
  if (text == "sublattices") return CountMode::sublattices;
  throw MalformedInput("unknown count mode '" + text + "'");
}

Integer predicted_sublattice_count(int n, std::int64_t p, int k) {
  // Multiply the series 1/(1 - p^i t) one factor at a time.
  std::vector<Integer> c(k + 1);
  c[0] = 1;
  for (int i = 0; i < n; ++i) {
    const Integer q = int_pow(Integer(static_cast<long>(p)), i);
    for (int d = 1; d <= k; ++d) c[d] += q * c[d - 1];
  }
  return c[k];
}

Integer predicted_work(int n, std::int64_t p, int K) {
  Integer total = 0;
  for (int k = 0; k <= K; ++k) total += predicted_sublattice_count(n, p, k);
  return total;
}

std::vector<std::vector<int>> compositions(int k, int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(n, 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == n - 1) {
      cur[pos] = left;
      out.push_back(cur);
      return;
    }
    for (int v = left; v >= 0; --v) {
      cur[pos] = v;
      rec(pos + 1, left - v);
    }
  };
  if (n >= 1) rec(0, k);
  return out;
}

void for_each_in_shard(std::int64_t p, const std::vector<int>& exponents,
                       const std::function<void(const HermiteSublattice&)>& visit) {
  const int n = static_cast<int>(exponents.size());
  std::vector<std::int64_t> e(static_cast<std::size_t>(n) * n, 0);
  std::vector<std::int64_t> diag(n);
  for (int i = 0; i < n; ++i) e[i * n + i] = diag[i] = checked_pow(p, exponents[i]);
  // Free off-diagonal slots (i, j), j > i, with radix M_jj.
  std::vector<std::pair<int, std::int64_t>> slots;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (diag[j] > 1) slots.push_back({i * n + j, diag[j]});
  HermiteSublattice lat(HermiteSublattice::Unchecked{}, p, n, std::move(e));
  for (;;) {
    visit(lat);
    std::size_t s = 0;
    for (; s < slots.size(); ++s) {
      auto& x = lat.entries_[slots[s].first];
      if (++x < slots[s].second) break;
      x = 0;
    }
    if (s == slots.size()) return;
  }
}

void enumerate_sublattices(int n, std::int64_t p, int k, const std::function<void(const HermiteSublattice&)>& visit,
                           const Integer& ceiling) {
  require_prime(p);
  if (n < 1 || n > max_rank || k < 0) throw MalformedInput("enumeration needs 1 <= n <= 32 and k >= 0");
  const Integer predicted = predicted_sublattice_count(n, p, k);
  if (predicted > ceiling) throw ResourceGuard("sublattice enumeration refused", predicted, ceiling);
  for (const auto& comp : compositions(k, n)) for_each_in_shard(p, comp, visit);
}

namespace {

// Membership of a raw vector given in a scratch buffer; the buffer is consumed.
bool contains_inplace(const HermiteSublattice& lat, std::int64_t* v) {
  const int n = lat.rank();
  for (int i = 0; i < n; ++i) {
    if (v[i] == 0) continue;
    const std::int64_t d = lat(i, i);
    if (v[i] % d != 0) return false;
    const std::int64_t c = v[i] / d;
    for (int j = i + 1; j < n; ++j)
      if (lat(i, j) != 0) v[j] = checked_sub(v[j], checked_mul(c, lat(i, j)));
  }
  return true;
}

}  // namespace

bool contains(const HermiteSublattice& lat, std::span<const std::int64_t> v) {
  if (static_cast<int>(v.size()) != lat.rank()) throw MalformedInput("vector length does not match lattice rank");
  std::array<std::int64_t, max_rank> buf{};
  std::copy(v.begin(), v.end(), buf.begin());
  return contains_inplace(lat, buf.data());
}

bool is_subring(const StructureConstantAlgebra& alg, const HermiteSublattice& lat) {
  const int n = lat.rank();
  if (alg.rank() != n) throw MalformedInput("algebra and lattice ranks differ");
  std::array<std::int64_t, max_rank> prod{};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      alg.multiply_into(lat.row(i).data(), lat.row(j).data(), prod.data());
      if (!contains_inplace(lat, prod.data())) return false;
    }
  return true;
}

bool is_ideal(const StructureConstantAlgebra& alg, const HermiteSublattice& lat) {
  const int n = lat.rank();
  if (alg.rank() != n) throw MalformedInput("algebra and lattice ranks differ");
  std::array<std::int64_t, max_rank> prod{}, basis{};
  for (int b = 0; b < n; ++b) {
    basis.fill(0);
    basis[b] = 1;
    for (int i = 0; i < n; ++i) {
      alg.multiply_into(lat.row(i).data(), basis.data(), prod.data());
      if (!contains_inplace(lat, prod.data())) return false;
      alg.multiply_into(basis.data(), lat.row(i).data(), prod.data());
      if (!contains_inplace(lat, prod.data())) return false;
    }
  }
  return true;
}

LocalDirichletTruncation count(const StructureConstantAlgebra& alg, std::int64_t p, int K, CountMode mode,
                               const CountOptions& options) {
  require_prime(p);
  const int n = alg.rank();
  if (n > max_rank || K < 0) throw MalformedInput("count needs rank <= 32 and K >= 0");
  const Integer work = predicted_work(n, p, K);
  if (work > options.ceiling) throw ResourceGuard("lattice count refused", work, options.ceiling);

  struct Shard {
    int k;
    std::vector<int> exponents;
  };
  std::vector<Shard> shards;
  for (int k = 0; k <= K; ++k)
    for (auto& comp : compositions(k, n)) shards.push_back({k, std::move(comp)});

  std::vector<std::int64_t> hits(shards.size(), 0);
  parallel_for(shards.size(), options.threads, [&](std::size_t s) {
    std::int64_t local = 0;
    for_each_in_shard(p, shards[s].exponents, [&](const HermiteSublattice& lat) {
      switch (mode) {
        case CountMode::sublattices: ++local; break;
        case CountMode::subrings: local += is_subring(alg, lat); break;
        case CountMode::ideals: local += is_ideal(alg, lat); break;
      }
    });
    hits[s] = local;
  });

  LocalDirichletTruncation out{p, std::vector<Integer>(K + 1)};
  for (std::size_t s = 0; s < shards.size(); ++s) out.coefficients[shards[s].k] += static_cast<long>(hits[s]);
  return out;
}

}  // namespace ringzeta
