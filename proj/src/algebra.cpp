#include "ringzeta/algebra.hpp"

#include <regex>

#include "ringzeta/errors.hpp"
#include "ringzeta/linalg.hpp"

namespace ringzeta {

std::string to_string(AlgebraFlag flag) {
  switch (flag) {
    case AlgebraFlag::antisymmetric: return "antisymmetric";
    case AlgebraFlag::lie: return "lie";
    case AlgebraFlag::associative: return "associative";
    case AlgebraFlag::commutative: return "commutative";
  }
  return "?";
}

AlgebraFlag parse_flag(const std::string& text) {
  if (text == "antisymmetric") return AlgebraFlag::antisymmetric;
  if (text == "lie") return AlgebraFlag::lie;
  if (text == "associative") return AlgebraFlag::associative;
  if (text == "commutative") return AlgebraFlag::commutative;
  throw MalformedInput("unknown algebra flag '" + text + "'");
}

namespace {

std::string triple_string(const IndexTriple& t) {
  return "(" + std::to_string(t[0] + 1) + "," + std::to_string(t[1] + 1) + "," + std::to_string(t[2] + 1) + ")";
}

// Dense structure-constant cube, lambda[(i*n + j)*n + k].
std::vector<Integer> dense_cube(int n, const StructureConstants& c) {
  std::vector<Integer> cube(static_cast<std::size_t>(n) * n * n);
  for (const auto& [t, v] : c) cube[(t[0] * n + t[1]) * n + t[2]] = static_cast<long>(v);
  return cube;
}

void check_indices(int rank, const StructureConstants& constants) {
  if (rank < 1) throw MalformedInput("rank must be at least 1");
  for (const auto& [t, v] : constants)
    for (int x : t)
      if (x < 0 || x >= rank) throw MalformedInput("structure constant index out of range at " + triple_string(t));
}

}  // namespace

ValidationReport validate_constants(int rank, const StructureConstants& constants) {
  check_indices(rank, constants);
  const int n = rank;
  const auto lam = dense_cube(n, constants);
  auto at = [&](int i, int j, int k) -> const Integer& { return lam[(i * n + j) * n + k]; };
  ValidationReport report;

  for (int i = 0; i < n && report.antisymmetry.pass; ++i)
    for (int j = 0; j < n && report.antisymmetry.pass; ++j)
      for (int k = 0; k < n; ++k)
        if (at(i, j, k) != -at(j, i, k)) {
          report.antisymmetry = {false, IndexTriple{i, j, k}};
          break;
        }

  for (int i = 0; i < n && report.commutativity.pass; ++i)
    for (int j = 0; j < n && report.commutativity.pass; ++j)
      for (int k = 0; k < n; ++k)
        if (at(i, j, k) != at(j, i, k)) {
          report.commutativity = {false, IndexTriple{i, j, k}};
          break;
        }

  // prod(a, b) as a coordinate vector
  auto prod = [&](const std::vector<Integer>& a, const std::vector<Integer>& b) {
    std::vector<Integer> out(n);
    for (int i = 0; i < n; ++i) {
      if (a[i] == 0) continue;
      for (int j = 0; j < n; ++j) {
        if (b[j] == 0) continue;
        for (int k = 0; k < n; ++k)
          if (at(i, j, k) != 0) out[k] += a[i] * b[j] * at(i, j, k);
      }
    }
    return out;
  };
  auto basis = [&](int i) {
    std::vector<Integer> e(n);
    e[i] = 1;
    return e;
  };

  for (int a = 0; a < n && (report.jacobi.pass || report.associativity.pass); ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        const auto ea = basis(a), eb = basis(b), ec = basis(c);
        if (report.jacobi.pass) {
          auto j1 = prod(ea, prod(eb, ec));
          auto j2 = prod(eb, prod(ec, ea));
          auto j3 = prod(ec, prod(ea, eb));
          for (int k = 0; k < n; ++k)
            if (j1[k] + j2[k] + j3[k] != 0) {
              report.jacobi = {false, IndexTriple{a, b, c}};
              break;
            }
        }
        if (report.associativity.pass && prod(prod(ea, eb), ec) != prod(ea, prod(eb, ec)))
          report.associativity = {false, IndexTriple{a, b, c}};
      }
  return report;
}

StructureConstantAlgebra::StructureConstantAlgebra(std::string name, int rank, StructureConstants constants,
                                                   std::set<AlgebraFlag> flags)
    : name_(std::move(name)), rank_(rank), constants_(std::move(constants)), flags_(std::move(flags)) {
  for (auto it = constants_.begin(); it != constants_.end();)
    it = it->second == 0 ? constants_.erase(it) : std::next(it);
  const ValidationReport report = validate_constants(rank_, constants_);
  auto require = [&](AlgebraFlag f, const AxiomVerdict& v, const char* axiom) {
    if (has_flag(f) && !v.pass)
      throw MalformedInput("algebra '" + name_ + "' declared " + to_string(f) + " but " + axiom +
                           " fails at " + triple_string(*v.witness));
  };
  require(AlgebraFlag::antisymmetric, report.antisymmetry, "antisymmetry");
  require(AlgebraFlag::lie, report.antisymmetry, "antisymmetry");
  require(AlgebraFlag::lie, report.jacobi, "Jacobi");
  require(AlgebraFlag::associative, report.associativity, "associativity");
  require(AlgebraFlag::commutative, report.commutativity, "commutativity");
  for (const auto& [t, v] : constants_) terms_.push_back({t[0], t[1], t[2], v});
}

std::int64_t StructureConstantAlgebra::constant(int i, int j, int k) const {
  auto it = constants_.find({i, j, k});
  return it == constants_.end() ? 0 : it->second;
}

std::vector<std::int64_t> StructureConstantAlgebra::multiply(std::span<const std::int64_t> u,
                                                             std::span<const std::int64_t> v) const {
  if (static_cast<int>(u.size()) != rank_ || static_cast<int>(v.size()) != rank_)
    throw MalformedInput("vector length does not match algebra rank");
  std::vector<std::int64_t> out(rank_, 0);
  multiply_into(u.data(), v.data(), out.data());
  return out;
}

void StructureConstantAlgebra::multiply_into(const std::int64_t* u, const std::int64_t* v, std::int64_t* out) const {
  for (int k = 0; k < rank_; ++k) out[k] = 0;
  for (const Term& t : terms_) {
    if (u[t.i] == 0 || v[t.j] == 0) continue;
    out[t.k] = checked_add(out[t.k], checked_mul(checked_mul(u[t.i], v[t.j]), t.value));
  }
}

ValidationReport validate(const StructureConstantAlgebra& alg) {
  return validate_constants(alg.rank(), alg.constants());
}

std::optional<int> nilpotency_class(const StructureConstantAlgebra& alg) {
  const int n = alg.rank();
  // Current term of the lower central series as rows spanning it over Q.
  std::vector<std::vector<Integer>> gamma;
  for (int i = 0; i < n; ++i) {
    std::vector<Integer> e(n);
    e[i] = 1;
    gamma.push_back(e);
  }
  std::size_t previous_rank = static_cast<std::size_t>(n);
  for (int c = 1;; ++c) {
    std::vector<std::vector<Integer>> next;
    for (const auto& g : gamma)
      for (int b = 0; b < n; ++b) {
        std::vector<Integer> left(n), right(n);
        for (const auto& t : alg.terms()) {
          if (t.j == b && g[t.i] != 0) left[t.k] += g[t.i] * t.value;
          if (t.i == b && g[t.j] != 0) right[t.k] += g[t.j] * t.value;
        }
        next.push_back(std::move(left));
        next.push_back(std::move(right));
      }
    linalg::RatMatrix m(next.size(), static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < next.size(); ++i)
      for (int j = 0; j < n; ++j) m(i, j) = Rational(next[i][j]);
    const auto piv = linalg::rref(m);
    if (piv.empty()) return c;
    if (piv.size() == previous_rank) return std::nullopt;
    previous_rank = piv.size();
    gamma.clear();
    for (std::size_t i = 0; i < piv.size(); ++i) {
      std::vector<Integer> row(n);
      Integer l = 1;
      for (int j = 0; j < n; ++j) l = lcm(l, m(i, j).get_den());
      for (int j = 0; j < n; ++j) row[j] = Rational(m(i, j) * l).get_num();
      gamma.push_back(std::move(row));
    }
  }
}

StructureConstantAlgebra scale(const StructureConstantAlgebra& alg, std::int64_t p, int i) {
  const std::int64_t factor = checked_pow(p, i);
  StructureConstants c;
  for (const auto& [t, v] : alg.constants()) c[t] = checked_mul(v, factor);
  return StructureConstantAlgebra(alg.name() + "*" + std::to_string(p) + "^" + std::to_string(i), alg.rank(),
                                  std::move(c), alg.flags());
}

Class2Presentation::Class2Presentation(std::string name, int d, int dprime, StructureConstants constants)
    : name_(std::move(name)), d_(d), dprime_(dprime), constants_(std::move(constants)) {
  if (d < 1 || dprime < 1) throw MalformedInput("presentation needs d >= 1 and d' >= 1");
  for (auto it = constants_.begin(); it != constants_.end();)
    it = it->second == 0 ? constants_.erase(it) : std::next(it);
  for (const auto& [t, v] : constants_) {
    if (t[0] < 0 || t[0] >= d || t[1] < 0 || t[1] >= d || t[2] < 0 || t[2] >= dprime)
      throw MalformedInput("presentation index out of range at " + triple_string(t));
    auto it = constants_.find({t[1], t[0], t[2]});
    const std::int64_t mirror = it == constants_.end() ? 0 : it->second;
    if (mirror != -v) throw MalformedInput("presentation not antisymmetric at " + triple_string(t));
  }
}

StructureConstantAlgebra Class2Presentation::to_algebra() const {
  StructureConstants c;
  for (const auto& [t, v] : constants_) c[{t[0], t[1], d_ + t[2]}] = v;
  return StructureConstantAlgebra(name_, d_ + dprime_, std::move(c), {AlgebraFlag::antisymmetric, AlgebraFlag::lie});
}

CommutatorMatrix::CommutatorMatrix(int d, int dprime)
    : d_(d), dprime_(dprime), entries_(static_cast<std::size_t>(d) * d, std::vector<std::int64_t>(dprime, 0)) {}

std::vector<std::int64_t> CommutatorMatrix::evaluate(std::span<const std::int64_t> l) const {
  if (static_cast<int>(l.size()) != dprime_) throw MalformedInput("character vector has wrong length");
  std::vector<std::int64_t> out(static_cast<std::size_t>(d_) * d_, 0);
  for (std::size_t e = 0; e < entries_.size(); ++e)
    for (int k = 0; k < dprime_; ++k)
      if (entries_[e][k] != 0) out[e] = checked_add(out[e], checked_mul(entries_[e][k], l[k]));
  return out;
}

bool CommutatorMatrix::is_zero() const {
  for (const auto& e : entries_)
    for (auto x : e)
      if (x != 0) return false;
  return true;
}

CommutatorMatrix commutator_matrix(const Class2Presentation& pres) {
  CommutatorMatrix r(pres.d(), pres.dprime());
  for (const auto& [t, v] : pres.constants()) r.entry(t[0], t[1])[t[2]] = v;
  return r;
}

namespace {

void bracket(StructureConstants& c, int i, int j, int k, std::int64_t v) {
  c[{i, j, k}] += v;
  c[{j, i, k}] -= v;
}

// Parses "base(n)" into n; nullopt if name is not of that shape.
std::optional<int> parameter(const std::string& name, const std::string& base) {
  static const std::regex re(R"(([A-Za-z0-9_]+)\((\d+)\))");
  std::smatch m;
  if (!std::regex_match(name, m, re) || m[1] != base) return std::nullopt;
  return std::stoi(m[2]);
}

Class2Presentation free_nilpotent_presentation(int d) {
  if (d < 2) throw MalformedInput("free_nilpotent_2_d needs d >= 2");
  StructureConstants c;
  int k = 0;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      bracket(c, i, j, k, 1);
      ++k;
    }
  return Class2Presentation("free_nilpotent_2_d(" + std::to_string(d) + ")", d, d * (d - 1) / 2, c);
}

Class2Presentation dusautoy_presentation() {
  // [x_i, x_{3+j}] = R(y)_{ij} with R(y) = ((y3,y1,y2),(y1,y3,0),(y2,0,y1)).
  const int r[3][3] = {{2, 0, 1}, {0, 2, -1}, {1, -1, 0}};  // index of y, -1 for zero
  StructureConstants c;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (r[i][j] >= 0) bracket(c, i, 3 + j, r[i][j], 1);
  return Class2Presentation("dusautoy_ec", 6, 3, c);
}

}  // namespace

StructureConstantAlgebra catalog_algebra(const std::string& name) {
  const std::set<AlgebraFlag> lie{AlgebraFlag::antisymmetric, AlgebraFlag::lie};
  if (auto n = parameter(name, "abelian")) {
    if (*n < 1) throw MalformedInput("abelian(n) needs n >= 1");
    return StructureConstantAlgebra(name, *n, {}, {AlgebraFlag::antisymmetric, AlgebraFlag::lie,
                                                   AlgebraFlag::associative, AlgebraFlag::commutative});
  }
  if (name == "heisenberg") {
    StructureConstants c;
    bracket(c, 0, 1, 2, 1);  // [x, y] = z
    return StructureConstantAlgebra(name, 3, c, lie);
  }
  if (name == "sl2") {
    // basis e, f, h
    StructureConstants c;
    bracket(c, 0, 1, 2, 1);   // [e, f] = h
    bracket(c, 2, 0, 0, 2);   // [h, e] = 2e
    bracket(c, 2, 1, 1, -2);  // [h, f] = -2f
    return StructureConstantAlgebra(name, 3, c, lie);
  }
  if (auto d = parameter(name, "free_nilpotent_2_d")) {
    auto alg = free_nilpotent_presentation(*d).to_algebra();
    return StructureConstantAlgebra(name, alg.rank(), alg.constants(), lie);
  }
  if (auto n = parameter(name, "componentwise")) {
    if (*n < 1) throw MalformedInput("componentwise(n) needs n >= 1");
    StructureConstants c;
    for (int i = 0; i < *n; ++i) c[{i, i, i}] = 1;
    return StructureConstantAlgebra(name, *n, c, {AlgebraFlag::associative, AlgebraFlag::commutative});
  }
  if (name == "dusautoy_ec") return dusautoy_presentation().to_algebra();
  throw LookupError("unknown catalog ring '" + name + "'");
}

Class2Presentation catalog_presentation(const std::string& name) {
  if (name == "heisenberg") {
    StructureConstants c;
    bracket(c, 0, 1, 0, 1);
    return Class2Presentation(name, 2, 1, c);
  }
  if (auto d = parameter(name, "free_nilpotent_2_d")) return free_nilpotent_presentation(*d);
  if (name == "dusautoy_ec") return dusautoy_presentation();
  throw LookupError("unknown catalog presentation '" + name + "'");
}

std::vector<std::string> catalog_algebra_names() {
  return {"abelian(n)", "heisenberg", "sl2", "free_nilpotent_2_d(d)", "componentwise(n)", "dusautoy_ec"};
}

}  // namespace ringzeta
