#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "ringzeta/numeric.hpp"

namespace ringzeta {

enum class AlgebraFlag { antisymmetric, lie, associative, commutative };

std::string to_string(AlgebraFlag flag);
AlgebraFlag parse_flag(const std::string& text);

/// (i, j, k) with 0-based indices: e_i * e_j has coefficient lambda on e_k.
using IndexTriple = std::array<int, 3>;
using StructureConstants = std::map<IndexTriple, std::int64_t>;

/// One axiom verdict; the witness is a 0-based basis triple.
struct AxiomVerdict {
  bool pass = true;
  std::optional<IndexTriple> witness;
};

struct ValidationReport {
  AxiomVerdict antisymmetry;
  AxiomVerdict jacobi;
  AxiomVerdict associativity;
  AxiomVerdict commutativity;
};

/// Checks every axiom on all basis triples, independent of any declared flags.
ValidationReport validate_constants(int rank, const StructureConstants& constants);

/// Rank-n lattice with a bi-additive product e_i e_j = sum_k lambda_{ij}^k e_k.
/// Immutable; construction rejects out-of-range indices and violated flags.
class StructureConstantAlgebra {
 public:
  struct Term {
    int i, j, k;
    std::int64_t value;
  };

  StructureConstantAlgebra(std::string name, int rank, StructureConstants constants,
                           std::set<AlgebraFlag> flags = {});

  const std::string& name() const { return name_; }
  int rank() const { return rank_; }
  const StructureConstants& constants() const { return constants_; }
  const std::set<AlgebraFlag>& flags() const { return flags_; }
  bool has_flag(AlgebraFlag f) const { return flags_.count(f) != 0; }
  std::int64_t constant(int i, int j, int k) const;

  /// Nonzero constants as a flat list, for hot loops.
  const std::vector<Term>& terms() const { return terms_; }

  /// Bilinear product of coordinate vectors.
  std::vector<std::int64_t> multiply(std::span<const std::int64_t> u, std::span<const std::int64_t> v) const;

  /// Product written into out (size rank); no length checks.
  void multiply_into(const std::int64_t* u, const std::int64_t* v, std::int64_t* out) const;

 private:
  std::string name_;
  int rank_;
  StructureConstants constants_;
  std::set<AlgebraFlag> flags_;
  std::vector<Term> terms_;
};

ValidationReport validate(const StructureConstantAlgebra& alg);

/// Smallest c with gamma_{c+1} = 0 over Q; nullopt when the series stalls at a nonzero term.
std::optional<int> nilpotency_class(const StructureConstantAlgebra& alg);

/// Constants multiplied by p^i: the ring p^i L in its scaled basis.
StructureConstantAlgebra scale(const StructureConstantAlgebra& alg, std::int64_t p, int i);

/// Relations [e_i, e_j] = sum_k lambda_{ij}^k f_k of a class-2 group/Lie ring.
class Class2Presentation {
 public:
  Class2Presentation(std::string name, int d, int dprime, StructureConstants constants);

  const std::string& name() const { return name_; }
  int d() const { return d_; }
  int dprime() const { return dprime_; }
  const StructureConstants& constants() const { return constants_; }

  /// The rank d + d' Lie ring with e_1..e_d followed by f_1..f_{d'}.
  StructureConstantAlgebra to_algebra() const;

 private:
  std::string name_;
  int d_, dprime_;
  StructureConstants constants_;
};

/// d x d antisymmetric matrix of integer linear forms in y_1..y_{d'}.
class CommutatorMatrix {
 public:
  CommutatorMatrix(int d, int dprime);

  int d() const { return d_; }
  int dprime() const { return dprime_; }
  /// Coefficient vector (length d') of entry (i, j).
  const std::vector<std::int64_t>& entry(int i, int j) const { return entries_[i * d_ + j]; }
  std::vector<std::int64_t>& entry(int i, int j) { return entries_[i * d_ + j]; }

  /// Row-major d x d integer matrix R(l).
  std::vector<std::int64_t> evaluate(std::span<const std::int64_t> l) const;

  bool is_zero() const;

 private:
  int d_, dprime_;
  std::vector<std::vector<std::int64_t>> entries_;
};

CommutatorMatrix commutator_matrix(const Class2Presentation& pres);

/// Catalog of example rings. Algebra names: abelian(n), heisenberg, sl2, free_nilpotent_2_d(d),
/// componentwise(n), dusautoy_ec. Presentation names: heisenberg, free_nilpotent_2_d(d), dusautoy_ec.
StructureConstantAlgebra catalog_algebra(const std::string& name);
Class2Presentation catalog_presentation(const std::string& name);
std::vector<std::string> catalog_algebra_names();

}  // namespace ringzeta
