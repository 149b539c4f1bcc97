#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "ringzeta/algebra.hpp"
#include "ringzeta/dirichlet.hpp"

namespace ringzeta {

/// Finite-index sublattice of Z_p^n in canonical upper-triangular form. Rows are generators,
/// M_ii = p^{m_i}, and 0 <= M_ij < M_jj for j > i.
class HermiteSublattice {
 public:
  /// Validates canonical shape; throws MalformedInput otherwise.
  HermiteSublattice(std::int64_t p, int n, std::vector<std::int64_t> entries);

  /// Canonical form of the Z_p-span of arbitrary full-rank integer generators.
  static HermiteSublattice canonicalize(std::int64_t p, const std::vector<std::vector<std::int64_t>>& rows);

  static HermiteSublattice identity(std::int64_t p, int n);

  std::int64_t prime() const { return p_; }
  int rank() const { return n_; }
  std::int64_t operator()(int i, int j) const { return entries_[i * n_ + j]; }
  const std::vector<std::int64_t>& entries() const { return entries_; }
  std::span<const std::int64_t> row(int i) const { return {entries_.data() + i * n_, static_cast<std::size_t>(n_)}; }
  /// Diagonal exponents m_i.
  std::vector<int> diagonal_exponents() const;
  /// k with index p^k.
  int index_exponent() const;

  bool operator==(const HermiteSublattice&) const = default;
  auto operator<=>(const HermiteSublattice&) const = default;

 private:
  struct Unchecked {};
  HermiteSublattice(Unchecked, std::int64_t p, int n, std::vector<std::int64_t> entries)
      : p_(p), n_(n), entries_(std::move(entries)) {}
  friend void for_each_in_shard(std::int64_t, const std::vector<int>&,
                                const std::function<void(const HermiteSublattice&)>&);

  std::int64_t p_;
  int n_;
  std::vector<std::int64_t> entries_;
};

std::string to_string(const HermiteSublattice& lat);

enum class CountMode { subrings, ideals, sublattices };
std::string to_string(CountMode mode);
CountMode parse_count_mode(const std::string& text);

inline constexpr long default_lattice_ceiling = 100'000'000;

/// Number of index-p^k sublattices of Z_p^n: coefficient of t^k in prod_{i<n} 1/(1 - p^i t).
Integer predicted_sublattice_count(int n, std::int64_t p, int k);

/// Predicted lattices visited by a count to depth K.
Integer predicted_work(int n, std::int64_t p, int K);

/// Weak compositions of k into n parts, in lexicographic order; the sharding unit.
std::vector<std::vector<int>> compositions(int k, int n);

/// Visits every index-p^k lattice with diagonal exponents given by one composition.
void for_each_in_shard(std::int64_t p, const std::vector<int>& exponents,
                       const std::function<void(const HermiteSublattice&)>& visit);

/// Visits every index-p^k sublattice exactly once. Throws ResourceGuard above ceiling.
void enumerate_sublattices(int n, std::int64_t p, int k, const std::function<void(const HermiteSublattice&)>& visit,
                           const Integer& ceiling = Integer(default_lattice_ceiling));

/// Z_p-membership by exact triangular back-substitution.
bool contains(const HermiteSublattice& lat, std::span<const std::int64_t> v);

bool is_subring(const StructureConstantAlgebra& alg, const HermiteSublattice& lat);
bool is_ideal(const StructureConstantAlgebra& alg, const HermiteSublattice& lat);

struct CountOptions {
  int threads = 1;
  Integer ceiling = Integer(default_lattice_ceiling);
};

/// a[k] = number of index-p^k subrings / ideals / sublattices, k = 0..K.
LocalDirichletTruncation count(const StructureConstantAlgebra& alg, std::int64_t p, int K, CountMode mode,
                               const CountOptions& options = {});

}  // namespace ringzeta
