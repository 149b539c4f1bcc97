#include "ringzeta/catalog.hpp"

#include <fstream>
#include <regex>
#include <sstream>

#include <json.hpp>

#include "catalog_data.hpp"
#include "ringzeta/errors.hpp"

namespace ringzeta {

using nlohmann::json;

const BivariateRationalFunction& CatalogFormula::function() const {
  if (is_hybrid()) throw ContractError("'" + name + "' is a point-count hybrid");
  return std::get<BivariateRationalFunction>(value);
}

const PointCountHybrid& CatalogFormula::hybrid() const {
  if (!is_hybrid()) throw ContractError("'" + name + "' is not a point-count hybrid");
  return std::get<PointCountHybrid>(value);
}

BivariateRationalFunction zeta_Zn(int n) {
  if (n < 1) throw MalformedInput("zeta_Zn needs n >= 1");
  std::vector<Monomial> f;
  for (int i = 0; i < n; ++i) f.push_back({i, 1});
  return BivariateRationalFunction(BivariatePolynomial(1), f);
}

namespace {

Rational parse_coefficient(const json& c) {
  if (c.is_number_integer()) return Rational(static_cast<long>(c.get<std::int64_t>()));
  if (c.is_string()) {
    Rational q(c.get<std::string>());
    q.canonicalize();
    return q;
  }
  throw MalformedInput("catalog coefficient must be an integer or a rational string");
}

BivariateRationalFunction parse_function(const json& j) {
  BivariatePolynomial num(1);
  for (const auto& factor : j.at("numerator")) {
    BivariatePolynomial p;
    for (const auto& t : factor) p.add_term(t.at(0).get<int>(), t.at(1).get<int>(), parse_coefficient(t.at(2)));
    num *= p;
  }
  std::vector<Monomial> den;
  for (const auto& d : j.at("denominator")) den.push_back({d.at(0).get<int>(), d.at(1).get<int>()});
  return BivariateRationalFunction(num, den);
}

CatalogFormula parse_entry(const std::string& name, const json& j) {
  CatalogFormula f{name, j.value("description", ""), BivariateRationalFunction(), std::nullopt, {}, j.value("note", "")};
  if (j.contains("funeq")) {
    const auto& e = j.at("funeq");
    f.funeq = FunctionalEquation{e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<int>()};
  }
  if (j.contains("parts")) {
    PointCountHybrid h;
    for (const auto& part : j.at("parts")) {
      std::optional<int> dim;
      if (part.contains("dimension")) dim = part.at("dimension").get<int>();
      h.parts.push_back({part.at("weight").get<std::string>(), dim, parse_function(part)});
    }
    f.value = std::move(h);
    if (j.contains("weights"))
      for (const auto& [sym, spec] : j.at("weights").items())
        f.weights[sym] = {spec.at("kind").get<std::string>(), spec.at("polynomial").get<std::string>()};
  } else {
    f.value = parse_function(j);
  }
  return f;
}

std::optional<int> family_parameter(const std::string& name, const std::string& base) {
  static const std::regex re(R"(([A-Za-z0-9_]+)\((\d+)\))");
  std::smatch m;
  if (!std::regex_match(name, m, re) || m[1] != base) return std::nullopt;
  return std::stoi(m[2]);
}

}  // namespace

FormulaCatalog FormulaCatalog::parse(const std::string& json_text) {
  FormulaCatalog c;
  try {
    const json j = json::parse(json_text);
    if (!j.is_object()) throw MalformedInput("catalog must be a JSON object");
    for (const auto& [name, entry] : j.items()) {
      if (!name.empty() && name[0] == '_') continue;
      c.entries_.emplace(name, parse_entry(name, entry));
    }
  } catch (const json::exception& e) {
    throw MalformedInput(std::string("catalog JSON: ") + e.what());
  }
  return c;
}

FormulaCatalog FormulaCatalog::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MalformedInput("cannot read catalog file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

const FormulaCatalog& FormulaCatalog::builtin() {
  static const FormulaCatalog catalog = parse(detail::catalog_json);
  return catalog;
}

CatalogFormula FormulaCatalog::lookup(const std::string& name) const {
  if (auto it = entries_.find(name); it != entries_.end()) return it->second;
  if (auto n = family_parameter(name, "zeta_Zn")) {
    FunctionalEquation fe{*n % 2 ? -1 : 1, *n * (*n - 1) / 2, *n};
    return {name, "Subgroup zeta function of Z^n", zeta_Zn(*n), fe, {}, ""};
  }
  if (auto n = family_parameter(name, "componentwise_ideal")) {
    if (*n < 1) throw MalformedInput("componentwise_ideal needs n >= 1");
    return {name, "Ideal zeta function of Z^n with componentwise multiplication",
            BivariateRationalFunction(BivariatePolynomial(1), std::vector<Monomial>(*n, {0, 1})), std::nullopt, {}, ""};
  }
  if (auto d = family_parameter(name, "abelian_pgroups")) {
    if (*d < 1) throw MalformedInput("abelian_pgroups needs d >= 1");
    std::vector<Monomial> f;
    for (int i = 1; i <= *d; ++i) f.push_back({0, i});
    return {name, "Generating function for abelian p-groups of rank at most d", BivariateRationalFunction(1, f),
            std::nullopt, {}, ""};
  }
  throw LookupError("unknown catalog formula '" + name + "'");
}

std::vector<std::string> FormulaCatalog::names() const {
  std::vector<std::string> out;
  for (const auto& [n, e] : entries_) out.push_back(n);
  out.push_back("zeta_Zn(n)");
  out.push_back("componentwise_ideal(n)");
  out.push_back("abelian_pgroups(d)");
  return out;
}

}  // namespace ringzeta
