#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ringzeta/algebra.hpp"
#include "ringzeta/cones.hpp"
#include "ringzeta/numeric.hpp"

namespace ringzeta {

using json = nlohmann::json;

json load_json_file(const std::string& path);

/// Ring file contents before axiom checks: constants are 0-based here, 1-based on disk.
struct RingDefinition {
  std::string name;
  int rank = 0;
  StructureConstants constants;
  std::set<AlgebraFlag> flags;
};

RingDefinition ring_definition_from_json(const json& j);
json to_json(const RingDefinition& def);
RingDefinition definition_of(const StructureConstantAlgebra& alg);
StructureConstantAlgebra to_algebra(const RingDefinition& def);

Class2Presentation presentation_from_json(const json& j);
json to_json(const Class2Presentation& pres);

DiophantineConeSystem system_from_json(const json& j);
json to_json(const DiophantineConeSystem& sys);

/// "catalog:NAME" or a path to a JSON file.
StructureConstantAlgebra load_ring(const std::string& spec);
Class2Presentation load_presentation(const std::string& spec);

/// Integers small enough for a JSON number are written as numbers, others as decimal strings.
json integer_to_json(const Integer& x);
Integer integer_from_json(const json& j);

struct ComparisonReport {
  std::string left;
  std::string right;
  std::int64_t prime = 0;
  int depth = 0;
  std::vector<std::pair<Integer, Integer>> pairs;

  bool pass() const;
  /// Exponents k where the two sides differ.
  std::vector<int> mismatches() const;
  bool operator==(const ComparisonReport&) const = default;
};

ComparisonReport compare(std::string left, const std::vector<Integer>& a, std::string right,
                         const std::vector<Integer>& b, std::int64_t prime);
json to_json(const ComparisonReport& r);
ComparisonReport comparison_from_json(const json& j);

}  // namespace ringzeta
