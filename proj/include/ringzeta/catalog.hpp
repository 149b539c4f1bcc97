#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ringzeta/ratfun.hpp"

namespace ringzeta {

/// How a hybrid weight symbol is evaluated at a prime.
struct WeightSpec {
  std::string kind;        ///< "projective" or "affine"
  std::string polynomial;  ///< curve in the polynomial expression grammar
};

struct CatalogFormula {
  std::string name;
  std::string description;
  std::variant<BivariateRationalFunction, PointCountHybrid> value;
  std::optional<FunctionalEquation> funeq;
  std::map<std::string, WeightSpec> weights;
  std::string note;

  bool is_hybrid() const { return std::holds_alternative<PointCountHybrid>(value); }
  const BivariateRationalFunction& function() const;
  const PointCountHybrid& hybrid() const;
};

/// Named closed forms. Parametrized families zeta_Zn(n), componentwise_ideal(n) and
/// abelian_pgroups(d) are generated on lookup.
class FormulaCatalog {
 public:
  static const FormulaCatalog& builtin();
  static FormulaCatalog parse(const std::string& json_text);
  static FormulaCatalog load(const std::string& path);

  CatalogFormula lookup(const std::string& name) const;
  std::vector<std::string> names() const;

 private:
  std::map<std::string, CatalogFormula> entries_;
};

inline CatalogFormula formula_catalog(const std::string& name) { return FormulaCatalog::builtin().lookup(name); }

/// prod_{i<n} 1/(1 - X^i Y)
BivariateRationalFunction zeta_Zn(int n);

}  // namespace ringzeta
