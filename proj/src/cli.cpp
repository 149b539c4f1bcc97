#include "ringzeta/cli.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "ringzeta/catalog.hpp"
#include "ringzeta/cones.hpp"
#include "ringzeta/coxeter.hpp"
#include "ringzeta/errors.hpp"
#include "ringzeta/igusa.hpp"
#include "ringzeta/json_io.hpp"
#include "ringzeta/latticezeta.hpp"
#include "ringzeta/repzeta.hpp"

namespace ringzeta {

namespace {

constexpr const char* grammar_help =
    "Polynomials: integer literals, variables, + - * ^ and parentheses; exponents are\n"
    "non-negative integer literals. Example: \"y^2*z - x^3 + x*z^2\".\n"
    "Rings and presentations: catalog:NAME or a path to a JSON file.";

struct Report {
  json doc = json::object();
  std::vector<std::pair<std::string, std::string>> summary;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  int code = exit_code::success;
};

void emit(const Report& r, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << r.doc.dump(2) << '\n';
    return;
  }
  if (format == "csv") {
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cells[i];
      out << '\n';
    };
    if (!r.header.empty()) line(r.header);
    for (const auto& row : r.rows) line(row);
    return;
  }
  for (const auto& [k, v] : r.summary) out << k << ": " << v << '\n';
  if (r.header.empty()) return;
  std::vector<std::size_t> width(r.header.size());
  for (std::size_t i = 0; i < r.header.size(); ++i) width[i] = r.header[i].size();
  for (const auto& row : r.rows)
    for (std::size_t i = 0; i < row.size() && i < width.size(); ++i) width[i] = std::max(width[i], row[i].size());
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "  " : "") << std::setw(static_cast<int>(width[i])) << cells[i];
    out << '\n';
  };
  line(r.header);
  for (const auto& row : r.rows) line(row);
}

std::string str(const Integer& x) { return x.get_str(); }
std::string str(const Rational& x) { return x.get_str(); }

void coefficient_table(Report& r, const std::vector<Integer>& c) {
  r.header = {"index_exponent", "coefficient"};
  json arr = json::array();
  for (std::size_t k = 0; k < c.size(); ++k) {
    r.rows.push_back({std::to_string(k), str(c[k])});
    arr.push_back(integer_to_json(c[k]));
  }
  r.doc["coefficients"] = arr;
}

Report comparison(const ComparisonReport& cmp) {
  Report r;
  r.doc = to_json(cmp);
  r.summary = {{"left", cmp.left}, {"right", cmp.right}, {"prime", std::to_string(cmp.prime)},
               {"verdict", cmp.pass() ? "pass" : "fail"}};
  r.header = {"index_exponent", "left", "right", "match"};
  for (std::size_t k = 0; k < cmp.pairs.size(); ++k)
    r.rows.push_back({std::to_string(k), str(cmp.pairs[k].first), str(cmp.pairs[k].second),
                      cmp.pairs[k].first == cmp.pairs[k].second ? "yes" : "no"});
  r.code = cmp.pass() ? exit_code::success : exit_code::comparison_failed;
  return r;
}

// Shared state for one invocation.
struct Context {
  std::string format = "table";
  std::string catalog_path;
  int threads = 1;
  bool yes = false;
  std::string ceiling;
  std::ostream* err = nullptr;

  FormulaCatalog catalog() const {
    return catalog_path.empty() ? FormulaCatalog::builtin() : FormulaCatalog::load(catalog_path);
  }

  /// Prints the prediction; with --yes the ceiling is lifted to it.
  Integer announce(const std::string& what, const Integer& predicted, Integer ceiling) const {
    if (!this->ceiling.empty()) ceiling = Integer(this->ceiling);
    *err << "predicted " << what << ": " << predicted.get_str() << " (ceiling " << ceiling.get_str() << ")"
         << (predicted > ceiling && yes ? ", proceeding because of --yes" : "") << '\n';
    return yes ? std::max(predicted, ceiling) : ceiling;
  }
};

std::vector<Integer> formula_coefficients(const CatalogFormula& f, std::int64_t p, int K) {
  if (f.is_hybrid()) return f.hybrid().expand(p, K, evaluate_weights(f.weights, p)).coefficients;
  return expand(f.function(), p, K).coefficients;
}

LocalFactorProvider formula_provider(const CatalogFormula& f) {
  if (!f.is_hybrid()) return provider_from(f.function());
  return [f](std::int64_t p, int depth) { return f.hybrid().expand(p, depth, evaluate_weights(f.weights, p)); };
}

LocalDirichletTruncation counted(const Context& ctx, const StructureConstantAlgebra& alg, std::int64_t p, int K,
                                 CountMode mode) {
  CountOptions opts;
  opts.threads = ctx.threads;
  opts.ceiling = ctx.announce("lattices visited", predicted_work(alg.rank(), p, K), opts.ceiling);
  return count(alg, p, K, mode, opts);
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (item.find_first_not_of(" ", used) != std::string::npos) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw MalformedInput("not an integer: '" + item + "'");
    }
  }
  return out;
}

Assignment parse_assignment(const std::string& text) {
  Assignment a;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    const auto v = parse_int_list(item);
    if (v.size() != 2) throw MalformedInput("assignment entries are 'a,b' pairs separated by ';'");
    a.push_back({static_cast<int>(v[0]), static_cast<int>(v[1])});
  }
  return a;
}

json exponent_json(const Exponent& e) { return json(e); }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Context ctx;
  ctx.err = &err;
  CLI::App app{"Exact computation and verification of zeta functions of rings, groups and cones."};
  app.footer(grammar_help);
  app.require_subcommand(1);
  app.add_option("--format", ctx.format, "Output format")->check(CLI::IsMember({"table", "csv", "json"}));
  app.add_option("--catalog", ctx.catalog_path, "Formula catalog JSON replacing the built-in one")->check(CLI::ExistingFile);
  app.add_option("--threads", ctx.threads, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--ceiling", ctx.ceiling, "Override the work ceiling of guarded commands")
      ->check(CLI::TypeValidator<unsigned long long>("POSITIVE"));
  app.add_flag("--yes", ctx.yes, "Proceed even when the predicted work exceeds the ceiling");
  app.fallthrough();

  std::function<Report()> action;
  auto bind = [&](CLI::App* cmd, std::function<Report()> f) { cmd->callback([&action, f] { action = f; }); };

  std::string ring, formula, name, system, poly, vars, presentation, mode = "subrings", asymptotics, assign;
  std::string form_source = "base";
  std::int64_t prime = 0, primes_up_to = 0, max_m = 0;
  int depth = 0, bound = 6, n = 0, scale_i = 0, show = 20;
  bool solve = false, strict = false;
  std::optional<int> expect_sign, expect_a, expect_b;

  auto add_prime = [&](CLI::App* c) { c->add_option("--prime,-p", prime, "Prime")->required(); };

  // ring
  auto* ring_cmd = app.add_subcommand("ring", "Ring definitions");
  ring_cmd->require_subcommand(1);
  auto* validate_cmd = ring_cmd->add_subcommand("validate", "Check the ring axioms on all basis triples");
  validate_cmd->add_option("--ring", ring, "catalog:NAME or JSON file")->required();
  bind(validate_cmd, [&] {
    RingDefinition def;
    if (ring.rfind("catalog:", 0) == 0)
      def = definition_of(load_ring(ring));
    else
      def = ring_definition_from_json(load_json_file(ring));
    const auto rep = validate_constants(def.rank, def.constants);
    Report r;
    r.header = {"axiom", "declared", "holds", "witness"};
    const std::vector<std::tuple<std::string, AlgebraFlag, AxiomVerdict>> axioms{
        {"antisymmetric", AlgebraFlag::antisymmetric, rep.antisymmetry},
        {"lie", AlgebraFlag::lie, rep.jacobi},
        {"associative", AlgebraFlag::associative, rep.associativity},
        {"commutative", AlgebraFlag::commutative, rep.commutativity}};
    bool ok = true;
    r.doc = {{"name", def.name}, {"rank", def.rank}, {"axioms", json::object()}};
    for (const auto& [label, flag, v] : axioms) {
      const bool declared = def.flags.count(flag) != 0;
      std::string witness = "-";
      json w = nullptr;
      if (v.witness) {
        const auto& t = *v.witness;
        witness = "(" + std::to_string(t[0] + 1) + "," + std::to_string(t[1] + 1) + "," + std::to_string(t[2] + 1) + ")";
        w = {t[0] + 1, t[1] + 1, t[2] + 1};
      }
      if (declared && !v.pass) ok = false;
      r.rows.push_back({label, declared ? "yes" : "no", v.pass ? "yes" : "no", witness});
      r.doc["axioms"][label] = {{"declared", declared}, {"holds", v.pass}, {"witness", w}};
    }
    r.summary = {{"ring", def.name}, {"rank", std::to_string(def.rank)}, {"declared flags", ok ? "hold" : "violated"}};
    if (ok) {
      const auto c = nilpotency_class(to_algebra(def));
      r.summary.push_back({"nilpotency class", c ? std::to_string(*c) : "not nilpotent"});
      r.doc["nilpotency_class"] = c ? json(*c) : json(nullptr);
    }
    r.doc["verdict"] = ok ? "pass" : "fail";
    r.code = ok ? exit_code::success : exit_code::comparison_failed;
    return r;
  });

  // zeta
  auto* zeta_cmd = app.add_subcommand("zeta", "Subring, ideal and sublattice zeta functions");
  zeta_cmd->require_subcommand(1);
  auto* count_cmd = zeta_cmd->add_subcommand("count", "Brute-force local counts a_{p^0}..a_{p^K}");
  count_cmd->add_option("--ring", ring, "Ring: catalog:NAME or a JSON file")->required();
  add_prime(count_cmd);
  count_cmd->add_option("--max-index,-K", depth, "Largest exponent K")->required()->check(CLI::NonNegativeNumber);
  count_cmd->add_option("--mode", mode, "What to count (default subrings)")->check(CLI::IsMember({"subrings", "ideals", "sublattices"}));
  bind(count_cmd, [&] {
    const auto alg = load_ring(ring);
    const auto t = counted(ctx, alg, prime, depth, parse_count_mode(mode));
    Report r;
    r.summary = {{"ring", alg.name()}, {"mode", mode}, {"prime", std::to_string(prime)}};
    r.doc = {{"ring", alg.name()}, {"mode", mode}, {"prime", prime}, {"depth", depth}};
    coefficient_table(r, t.coefficients);
    return r;
  });

  auto* formula_cmd = zeta_cmd->add_subcommand("formula", "Expand a catalog formula at a prime");
  formula_cmd->add_option("--name", name, "Catalog formula name")->required();
  add_prime(formula_cmd);
  formula_cmd->add_option("--max-index,-K", depth, "Largest index exponent K")->required()->check(CLI::NonNegativeNumber);
  bind(formula_cmd, [&] {
    const auto f = ctx.catalog().lookup(name);
    Report r;
    r.summary = {{"formula", name}, {"prime", std::to_string(prime)}};
    r.doc = {{"formula", name}, {"prime", prime}, {"depth", depth}};
    if (f.is_hybrid()) {
      json w = json::object();
      for (const auto& [s, v] : evaluate_weights(f.weights, prime)) {
        r.summary.push_back({s, str(v)});
        w[s] = integer_to_json(v);
      }
      r.doc["weights"] = w;
    }
    coefficient_table(r, formula_coefficients(f, prime, depth));
    return r;
  });

  auto* compare_cmd = zeta_cmd->add_subcommand("compare", "Brute-force counts against a catalog formula");
  compare_cmd->add_option("--ring", ring, "Ring: catalog:NAME or a JSON file")->required();
  compare_cmd->add_option("--formula", formula, "Catalog formula name")->required();
  add_prime(compare_cmd);
  compare_cmd->add_option("--max-index,-K", depth, "Largest index exponent K")->required()->check(CLI::NonNegativeNumber);
  compare_cmd->add_option("--mode", mode, "What to count (default subrings)")->check(CLI::IsMember({"subrings", "ideals", "sublattices"}));
  bind(compare_cmd, [&] {
    const auto f = ctx.catalog().lookup(formula);
    const auto alg = load_ring(ring);
    const auto brute = counted(ctx, alg, prime, depth, parse_count_mode(mode));
    return comparison(compare(alg.name() + " (" + mode + ")", brute.coefficients, formula,
                              formula_coefficients(f, prime, depth), prime));
  });

  auto* funeq_cmd = zeta_cmd->add_subcommand("funeq", "Functional equation under p -> 1/p");
  funeq_cmd->add_option("--name", name, "Catalog formula name")->required();
  auto* solve_opt = funeq_cmd->add_flag("--solve", solve, "Only solve; do not compare with an expectation");
  auto* es = funeq_cmd->add_option("--expect-sign", expect_sign, "Expected sign")->check(CLI::IsMember({-1, 1}));
  auto* ea = funeq_cmd->add_option("--expect-a", expect_a, "Expected exponent of p");
  auto* eb = funeq_cmd->add_option("--expect-b", expect_b, "Expected exponent of p^-s");
  solve_opt->excludes(es)->excludes(ea)->excludes(eb);
  bind(funeq_cmd, [&] {
    const auto f = ctx.catalog().lookup(name);
    std::optional<FunctionalEquation> expected;
    const int given = expect_sign.has_value() + expect_a.has_value() + expect_b.has_value();
    if (given != 0 && given != 3) throw MalformedInput("--expect-sign, --expect-a and --expect-b go together");
    if (given == 3)
      expected = FunctionalEquation{*expect_sign, *expect_a, *expect_b};
    else if (!solve)
      expected = f.funeq;
    const auto v = f.is_hybrid() ? hybrid_funeq_verdict(f.hybrid(), expected) : funeq_verdict(f.function(), expected);
    Report r;
    r.summary = {{"formula", name}, {"solved", v.solved ? to_string(*v.solved) : "no monomial functional equation"}};
    r.doc = {{"formula", name}};
    auto fe_json = [](const FunctionalEquation& fe) { return json{{"sign", fe.sign}, {"a", fe.a}, {"b", fe.b}}; };
    r.doc["solved"] = v.solved ? fe_json(*v.solved) : json(nullptr);
    if (expected) {
      r.summary.push_back({"expected", to_string(*expected)});
      r.summary.push_back({"verdict", v.pass ? "pass" : "fail"});
      r.doc["expected"] = fe_json(*expected);
      r.doc["verdict"] = v.pass ? "pass" : "fail";
      r.code = v.pass ? exit_code::success : exit_code::comparison_failed;
    }
    if (!v.detail.empty()) r.summary.push_back({"detail", v.detail});
    return r;
  });

  // cone
  auto* cone_cmd = app.add_subcommand("cone", "Linear diophantine systems and their cones");
  cone_cmd->require_subcommand(1);
  auto* rays_cmd = cone_cmd->add_subcommand("rays", "Extreme rays (completely fundamental solutions)");
  auto* series_cmd = cone_cmd->add_subcommand("series", "Solutions with every coordinate at most the bound");
  auto* ratform_cmd = cone_cmd->add_subcommand("ratform", "Rational generating function");
  auto* recip_cmd = cone_cmd->add_subcommand("reciprocity", "Check strict/non-strict reciprocity");
  for (auto* c : {rays_cmd, series_cmd, ratform_cmd, recip_cmd})
    c->add_option("--system", system, "System JSON file")->required()->check(CLI::ExistingFile);
  series_cmd->add_option("--bound,-B", bound, "Coordinate bound B")->check(CLI::NonNegativeNumber);
  series_cmd->add_flag("--strict", strict, "Positive solutions only");
  recip_cmd->add_option("--bound,-B", bound, "Coordinate bound B")->check(CLI::NonNegativeNumber);
  ratform_cmd->add_option("--substitute", assign, "Monomial images 'a,b;c,d;...' (X^a Y^b per variable)");
  bind(rays_cmd, [&] {
    const auto er = extreme_rays(system_from_json(load_json_file(system)));
    Report r;
    r.summary = {{"rays", std::to_string(er.rays.size())}, {"dimension", std::to_string(er.dimension)}};
    r.header = {"ray"};
    json arr = json::array();
    for (const auto& ray : er.rays) {
      r.rows.push_back({to_string(ray)});
      arr.push_back(exponent_json(ray));
    }
    r.doc = {{"rays", arr}, {"dimension", er.dimension}};
    return r;
  });
  bind(series_cmd, [&] {
    const auto sys = system_from_json(load_json_file(system));
    ctx.announce("points", int_pow(Integer(bound + 1), static_cast<unsigned long>(sys.original_variables())),
                 Integer(ConeGuard{}.max_points));
    const auto s = brute_series(sys, bound, strict);
    Report r;
    r.summary = {{"bound", std::to_string(bound)}, {"strict", strict ? "yes" : "no"}, {"terms", std::to_string(s.terms.size())}};
    r.header = {"exponent", "coefficient"};
    json arr = json::array();
    for (const auto& [e, c] : s.terms) {
      r.rows.push_back({to_string(e), str(c)});
      arr.push_back({{"exponent", e}, {"coefficient", integer_to_json(c)}});
    }
    r.doc = {{"bound", bound}, {"strict", strict}, {"terms", arr}};
    return r;
  });
  bind(ratform_cmd, [&] {
    const auto sys = system_from_json(load_json_file(system));
    const auto form = rational_form(sys);
    Report r;
    r.header = {"numerator_exponent", "coefficient"};
    json num = json::array(), rays = json::array();
    for (const auto& [e, c] : form.numerator) {
      r.rows.push_back({to_string(e), str(c)});
      num.push_back({{"exponent", e}, {"coefficient", integer_to_json(c)}});
    }
    std::string den;
    for (const auto& ray : form.rays) {
      den += "(1 - x^" + to_string(ray) + ")";
      rays.push_back(exponent_json(ray));
    }
    r.summary = {{"denominator", den.empty() ? "1" : den}};
    r.doc = {{"numerator", num}, {"rays", rays}};
    if (!assign.empty()) {
      const auto f = substitute(form, parse_assignment(assign));
      r.summary.push_back({"substituted", f.to_string()});
      r.doc["substituted"] = f.to_string();
    }
    return r;
  });
  bind(recip_cmd, [&] {
    const auto v = reciprocity_check(system_from_json(load_json_file(system)), bound);
    Report r;
    r.summary = {{"outcome", to_string(v.outcome)}, {"dimension", std::to_string(v.dimension)}, {"detail", v.detail}};
    r.doc = {{"outcome", to_string(v.outcome)}, {"dimension", v.dimension}, {"detail", v.detail}};
    r.code = v.outcome == ReciprocityOutcome::fail ? exit_code::comparison_failed : exit_code::success;
    return r;
  });

  // igusa
  auto* igusa_cmd = app.add_subcommand("igusa", "Igusa local zeta functions");
  igusa_cmd->require_subcommand(1);
  auto* poincare_cmd = igusa_cmd->add_subcommand("poincare", "Solution counts N_m and the series of Z_f");
  poincare_cmd->add_option("--poly", poly, "Polynomial expression")->required();
  poincare_cmd->add_option("--vars", vars, "Comma-separated variable order (default: alphabetical)");
  add_prime(poincare_cmd);
  poincare_cmd->add_option("--depth,-M", depth, "Largest modulus exponent M")->required()->check(CLI::PositiveNumber);
  bind(poincare_cmd, [&] {
    std::vector<std::string> names;
    if (!vars.empty()) {
      std::stringstream ss(vars);
      for (std::string v; std::getline(ss, v, ',');) names.push_back(v);
    }
    const auto f = IntegerPolynomial::parse(poly, names);
    PoincareOptions opts;
    opts.threads = ctx.threads;
    opts.ceiling = ctx.announce("points", int_pow(Integer(prime), static_cast<unsigned long>(f.variable_count() * depth)),
                                opts.ceiling);
    const auto pc = poincare_counts(f, prime, depth, opts);
    const auto z = zf_series_from_poincare(pc);
    Report r;
    r.summary = {{"polynomial", f.to_string()}, {"prime", std::to_string(prime)}};
    r.header = {"m", "N_m", "Z_coefficient"};
    json counts = json::array(), zs = json::array();
    for (int m = 0; m <= pc.depth(); ++m) {
      r.rows.push_back({std::to_string(m), str(pc.counts[m]), m < static_cast<int>(z.size()) ? str(z[m]) : "-"});
      counts.push_back(integer_to_json(pc.counts[m]));
    }
    for (const auto& c : z) zs.push_back(str(c));
    r.doc = {{"polynomial", f.to_string()}, {"prime", prime}, {"counts", counts}, {"zeta_coefficients", zs}};
    return r;
  });
  auto* zeta3d_cmd = igusa_cmd->add_subcommand("zeta3d", "Subring zeta of p^i L for a rank-3 antisymmetric ring");
  zeta3d_cmd->add_option("--ring", ring, "Ring: catalog:NAME or a JSON file")->required();
  add_prime(zeta3d_cmd);
  zeta3d_cmd->add_option("--depth,-K", depth, "Largest index exponent K")->required()->check(CLI::NonNegativeNumber);
  zeta3d_cmd->add_option("--scale,-i", scale_i, "Exponent i of p^i L")->check(CLI::NonNegativeNumber);
  zeta3d_cmd->add_option("--form-source", form_source, "Ring supplying the quadratic form")->check(CLI::IsMember({"base", "scaled"}));
  bind(zeta3d_cmd, [&] {
    const auto alg = load_ring(ring);
    const auto form = theorem3d_form(alg);
    PoincareOptions opts;
    opts.threads = ctx.threads;
    opts.ceiling = ctx.announce("points", int_pow(Integer(prime), static_cast<unsigned long>(3 * std::max(depth - scale_i, 0))),
                                opts.ceiling);
    const auto t = theorem3d_zeta(alg, prime, scale_i, depth, form_source == "base" ? FormSource::base : FormSource::scaled, opts);
    Report r;
    r.summary = {{"ring", alg.name()}, {"form", form.polynomial().to_string()}, {"prime", std::to_string(prime)},
                 {"scale", std::to_string(scale_i)}};
    r.doc = {{"ring", alg.name()}, {"form", form.polynomial().to_string()}, {"prime", prime}, {"scale", scale_i}, {"depth", depth}};
    coefficient_table(r, t.coefficients);
    return r;
  });

  // rep
  auto* rep_cmd = app.add_subcommand("rep", "Representation zeta functions of class-2 groups");
  rep_cmd->require_subcommand(1);
  auto* repzeta_cmd = rep_cmd->add_subcommand("zeta", "Twist-isoclass counts c_{p^0}..c_{p^J}");
  auto* repcmp_cmd = rep_cmd->add_subcommand("compare", "Character counts against a catalog formula");
  for (auto* c : {repzeta_cmd, repcmp_cmd}) {
    c->add_option("--presentation", presentation, "Presentation: catalog:NAME or a JSON file")->required();
    add_prime(c);
    c->add_option("--max-exp,-J", depth, "Largest exponent J")->required()->check(CLI::NonNegativeNumber);
  }
  repcmp_cmd->add_option("--formula", formula, "Catalog formula name")->required();
  auto rep_counts = [&] {
    const auto pres = load_presentation(presentation);
    RepZetaOptions opts;
    opts.threads = ctx.threads;
    Integer predicted = 0;
    for (int N = 1; N <= std::max(depth, 1); ++N)
      predicted += int_pow(Integer(prime), static_cast<unsigned long>(N * pres.dprime()));
    opts.ceiling = ctx.announce("characters (levels up to J)", predicted, opts.ceiling);
    return std::pair{pres.name(), rep_zeta_class2(pres, prime, depth, opts)};
  };
  bind(repzeta_cmd, [&] {
    const auto [label, t] = rep_counts();
    Report r;
    r.summary = {{"presentation", label}, {"prime", std::to_string(prime)}};
    r.doc = {{"presentation", label}, {"prime", prime}, {"depth", depth}};
    coefficient_table(r, t.coefficients);
    return r;
  });
  bind(repcmp_cmd, [&] {
    const auto f = ctx.catalog().lookup(formula);
    const auto [label, t] = rep_counts();
    return comparison(compare(label + " (characters)", t.coefficients, formula, formula_coefficients(f, prime, depth), prime));
  });

  // euler
  auto* euler_cmd = app.add_subcommand("euler", "Global Dirichlet coefficients from local factors");
  euler_cmd->add_option("--name", name, "Catalog formula name")->required();
  euler_cmd->add_option("--primes-up-to,-P", primes_up_to, "Largest prime used (default: --max-m)");
  euler_cmd->add_option("--max-m,-M", max_m, "Number of Dirichlet coefficients")->required()->check(CLI::PositiveNumber);
  euler_cmd->add_option("--asymptotics", asymptotics, "alpha,b,c: report s_m / (c m^alpha (log m)^b)");
  euler_cmd->add_option("--show", show, "Number of leading coefficients printed")->check(CLI::NonNegativeNumber);
  bind(euler_cmd, [&] {
    const auto f = ctx.catalog().lookup(name);
    const auto g = euler_product(formula_provider(f), primes_up_to ? primes_up_to : max_m, max_m, ctx.threads);
    Report r;
    r.summary = {{"formula", name}, {"M", std::to_string(max_m)}};
    r.header = {"m", "a_m"};
    json coeffs = json::array();
    for (std::int64_t m = 1; m <= std::min<std::int64_t>(show, max_m); ++m) {
      r.rows.push_back({std::to_string(m), str(g[m])});
      coeffs.push_back(integer_to_json(g[m]));
    }
    r.doc = {{"formula", name}, {"max_m", max_m}, {"coefficients", coeffs}};
    Integer total = 0;
    for (std::int64_t m = 1; m <= max_m; ++m) total += g[m];
    r.summary.push_back({"partial sum s_M", str(total)});
    r.doc["partial_sum"] = integer_to_json(total);
    if (!asymptotics.empty()) {
      std::vector<double> abc;
      std::stringstream ss(asymptotics);
      for (std::string item; std::getline(ss, item, ',');) {
        try {
          abc.push_back(std::stod(item));
        } catch (const std::logic_error&) {
          throw MalformedInput("not a number: '" + item + "'");
        }
      }
      if (abc.size() != 3) throw MalformedInput("--asymptotics takes alpha,b,c");
      json samples = json::array();
      for (const auto& s : asymptotic_ratio(g, abc[0], abc[1], abc[2])) {
        std::ostringstream ratio;
        ratio << std::setprecision(6) << s.ratio;
        r.summary.push_back({"ratio at m=" + std::to_string(s.m), ratio.str()});
        samples.push_back({{"m", s.m}, {"partial_sum", integer_to_json(s.partial_sum)}, {"ratio", s.ratio}});
      }
      r.doc["samples"] = samples;
    }
    return r;
  });

  // coxeter
  auto* coxeter_cmd = app.add_subcommand("coxeter", "Symmetric group identities");
  coxeter_cmd->require_subcommand(1);
  auto* check_cmd = coxeter_cmd->add_subcommand("check", "Descent sums, flag counts and longest-element identities");
  check_cmd->add_option("--n", n, "Degree of the symmetric group")->required()->check(CLI::Range(1, max_symmetric_degree));
  bind(check_cmd, [&] {
    Report r;
    r.header = {"check", "subject", "holds"};
    bool ok = true;
    json checks = json::array();
    auto record = [&](const std::string& check, const std::string& subject, bool holds) {
      ok = ok && holds;
      r.rows.push_back({check, subject, holds ? "yes" : "no"});
      checks.push_back({{"check", check}, {"subject", subject}, {"holds", holds}});
    };
    for (const auto& I : subsets_of_ranks(n))
      record("descent_sum", to_string(I) + " " + gaussian_binomial(n, I).to_string(), descent_sum(n, I) == gaussian_binomial(n, I));
    for (std::int64_t q : {2, 3}) {
      if (n > (q == 2 ? 4 : 3)) continue;
      for (const auto& I : subsets_of_ranks(n))
        record("flag_count q=" + std::to_string(q), to_string(I),
               Rational(flag_count(n, I, q)) == gaussian_binomial(n, I).evaluate(q));
    }
    const auto v = longest_element_identities(n);
    record("longest_element", v.witness ? v.witness->to_string() : "all of S_" + std::to_string(n), v.pass);
    r.summary = {{"n", std::to_string(n)}, {"verdict", ok ? "pass" : "fail"}};
    r.doc = {{"n", n}, {"checks", checks}, {"verdict", ok ? "pass" : "fail"}};
    r.code = ok ? exit_code::success : exit_code::comparison_failed;
    return r;
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_code::success : exit_code::usage;
  }

  try {
    if (!action) throw ContractError("no command selected");
    const Report r = action();
    emit(r, ctx.format, out);
    return r.code;
  } catch (const ResourceGuard& e) {
    err << "resource guard: " << e.what() << "\nrerun with --yes to proceed anyway\n";
    return exit_code::resource_guard;
  } catch (const InternalConsistency& e) {
    err << "internal consistency failure: " << e.what() << '\n';
    return exit_code::internal;
  } catch (const StabilizationError& e) {
    err << "stabilization failure: " << e.what() << '\n';
    return exit_code::internal;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::usage;
  } catch (const std::exception& e) {
    err << "unexpected failure: " << e.what() << '\n';
    return exit_code::internal;
  }
}

}  // namespace ringzeta
