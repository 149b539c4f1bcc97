#include "ringzeta/json_io.hpp"

#include <fstream>
#include <limits>

#include "ringzeta/errors.hpp"

namespace ringzeta {

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MalformedInput("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw MalformedInput(path + ": " + e.what());
  }
}

namespace {

template <class F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw MalformedInput(std::string(what) + ": " + e.what());
  }
}

StructureConstants read_constants(const json& arr, int first_bound, int last_bound) {
  StructureConstants out;
  for (const auto& c : arr) {
    if (!c.is_array() || c.size() != 4) throw MalformedInput("constant entries are [i, j, k, value]");
    const int i = c[0].get<int>(), j = c[1].get<int>(), k = c[2].get<int>();
    const auto v = c[3].get<std::int64_t>();
    if (i < 1 || j < 1 || i > first_bound || j > first_bound || k < 1 || k > last_bound)
      throw MalformedInput("constant index out of range in [" + std::to_string(i) + "," + std::to_string(j) + "," +
                           std::to_string(k) + "]");
    if (!out.emplace(IndexTriple{i - 1, j - 1, k - 1}, v).second)
      throw MalformedInput("duplicate constant for (" + std::to_string(i) + "," + std::to_string(j) + "," +
                           std::to_string(k) + ")");
  }
  std::erase_if(out, [](const auto& t) { return t.second == 0; });
  return out;
}

json write_constants(const StructureConstants& c) {
  json arr = json::array();
  for (const auto& [t, v] : c) arr.push_back({t[0] + 1, t[1] + 1, t[2] + 1, v});
  return arr;
}

}  // namespace

RingDefinition ring_definition_from_json(const json& j) {
  return guarded("ring definition", [&] {
    RingDefinition d;
    d.name = j.value("name", "ring");
    d.rank = j.at("rank").get<int>();
    if (d.rank < 1) throw MalformedInput("rank must be positive");
    d.constants = read_constants(j.at("constants"), d.rank, d.rank);
    for (const auto& f : j.value("flags", json::array())) d.flags.insert(parse_flag(f.get<std::string>()));
    return d;
  });
}

json to_json(const RingDefinition& def) {
  json flags = json::array();
  for (auto f : def.flags) flags.push_back(to_string(f));
  return {{"name", def.name}, {"rank", def.rank}, {"constants", write_constants(def.constants)}, {"flags", flags}};
}

RingDefinition definition_of(const StructureConstantAlgebra& alg) {
  return {alg.name(), alg.rank(), alg.constants(), alg.flags()};
}

StructureConstantAlgebra to_algebra(const RingDefinition& def) {
  return StructureConstantAlgebra(def.name, def.rank, def.constants, def.flags);
}

Class2Presentation presentation_from_json(const json& j) {
  return guarded("presentation", [&] {
    const int d = j.at("d").get<int>(), dp = j.at("dprime").get<int>();
    if (d < 1 || dp < 1) throw MalformedInput("d and dprime must be positive");
    return Class2Presentation(j.value("name", "presentation"), d, dp, read_constants(j.at("constants"), d, dp));
  });
}

json to_json(const Class2Presentation& pres) {
  return {{"name", pres.name()}, {"d", pres.d()}, {"dprime", pres.dprime()}, {"constants", write_constants(pres.constants())}};
}

DiophantineConeSystem system_from_json(const json& j) {
  return guarded("cone system", [&] {
    const auto phi = j.at("phi").get<std::vector<std::vector<std::int64_t>>>();
    int variables = j.contains("variables") ? j.at("variables").get<int>() : -1;
    if (variables < 0) {
      if (phi.empty()) throw MalformedInput("a system without rows needs \"variables\"");
      variables = static_cast<int>(phi.front().size());
    }
    std::vector<RowKind> kinds;
    if (j.contains("kinds")) {
      for (const auto& k : j.at("kinds")) {
        const auto s = k.get<std::string>();
        if (s == "eq")
          kinds.push_back(RowKind::equality);
        else if (s == "le")
          kinds.push_back(RowKind::less_equal);
        else
          throw MalformedInput("row kind must be \"eq\" or \"le\", got \"" + s + "\"");
      }
    } else {
      kinds.assign(phi.size(), RowKind::equality);
    }
    return DiophantineConeSystem(phi, kinds, variables);
  });
}

json to_json(const DiophantineConeSystem& sys) {
  json kinds = json::array();
  for (auto k : sys.row_kinds()) kinds.push_back(k == RowKind::equality ? "eq" : "le");
  return {{"phi", sys.original_rows()}, {"kinds", kinds}, {"variables", sys.original_variables()}};
}

namespace {

std::pair<bool, std::string> catalog_name(const std::string& spec) {
  static const std::string prefix = "catalog:";
  if (spec.rfind(prefix, 0) == 0) return {true, spec.substr(prefix.size())};
  return {false, spec};
}

}  // namespace

StructureConstantAlgebra load_ring(const std::string& spec) {
  const auto [is_catalog, rest] = catalog_name(spec);
  if (is_catalog) return catalog_algebra(rest);
  return to_algebra(ring_definition_from_json(load_json_file(rest)));
}

Class2Presentation load_presentation(const std::string& spec) {
  const auto [is_catalog, rest] = catalog_name(spec);
  if (is_catalog) return catalog_presentation(rest);
  return presentation_from_json(load_json_file(rest));
}

json integer_to_json(const Integer& x) {
  if (x.fits_slong_p()) return static_cast<std::int64_t>(x.get_si());
  return x.get_str();
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) return Integer(j.get<std::string>());
  throw MalformedInput("expected an integer");
}

bool ComparisonReport::pass() const { return mismatches().empty(); }

std::vector<int> ComparisonReport::mismatches() const {
  std::vector<int> out;
  for (std::size_t k = 0; k < pairs.size(); ++k)
    if (pairs[k].first != pairs[k].second) out.push_back(static_cast<int>(k));
  return out;
}

ComparisonReport compare(std::string left, const std::vector<Integer>& a, std::string right,
                         const std::vector<Integer>& b, std::int64_t prime) {
  if (a.size() != b.size()) throw ContractError("compared truncations have different depths");
  ComparisonReport r{std::move(left), std::move(right), prime, static_cast<int>(a.size()) - 1, {}};
  for (std::size_t k = 0; k < a.size(); ++k) r.pairs.emplace_back(a[k], b[k]);
  return r;
}

json to_json(const ComparisonReport& r) {
  json pairs = json::array();
  for (std::size_t k = 0; k < r.pairs.size(); ++k)
    pairs.push_back({{"index_exponent", k},
                     {"left", integer_to_json(r.pairs[k].first)},
                     {"right", integer_to_json(r.pairs[k].second)}});
  return {{"left", r.left}, {"right", r.right}, {"prime", r.prime}, {"depth", r.depth},
          {"pairs", pairs}, {"verdict", r.pass() ? "pass" : "fail"}};
}

ComparisonReport comparison_from_json(const json& j) {
  return guarded("comparison report", [&] {
    ComparisonReport r{j.at("left").get<std::string>(), j.at("right").get<std::string>(),
                       j.at("prime").get<std::int64_t>(), j.at("depth").get<int>(), {}};
    for (const auto& p : j.at("pairs")) r.pairs.emplace_back(integer_from_json(p.at("left")), integer_from_json(p.at("right")));
    if (j.at("verdict").get<std::string>() != (r.pass() ? "pass" : "fail"))
      throw MalformedInput("verdict does not match the coefficient pairs");
    return r;
  });
}

}  // namespace ringzeta
