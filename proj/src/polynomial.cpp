#include "ringzeta/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

#include "ringzeta/errors.hpp"

namespace ringzeta {

IntegerPolynomial::IntegerPolynomial(std::vector<std::string> variables) : variables_(std::move(variables)) {}

IntegerPolynomial IntegerPolynomial::constant(const Integer& c, std::vector<std::string> variables) {
  IntegerPolynomial p(std::move(variables));
  p.add_term(Exponents(p.variables_.size(), 0), c);
  return p;
}

IntegerPolynomial IntegerPolynomial::variable(int index, std::vector<std::string> variables) {
  IntegerPolynomial p(std::move(variables));
  Exponents e(p.variables_.size(), 0);
  e.at(static_cast<std::size_t>(index)) = 1;
  p.add_term(e, 1);
  return p;
}

void IntegerPolynomial::add_term(const Exponents& e, const Integer& c) {
  if (e.size() != variables_.size()) throw ContractError("exponent vector has the wrong length");
  if (c == 0) return;
  auto& slot = terms_[e];
  slot += c;
  if (slot == 0) terms_.erase(e);
}

IntegerPolynomial& IntegerPolynomial::operator+=(const IntegerPolynomial& o) {
  if (o.variables_ != variables_) throw ContractError("polynomials over different variables");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

IntegerPolynomial& IntegerPolynomial::operator-=(const IntegerPolynomial& o) {
  if (o.variables_ != variables_) throw ContractError("polynomials over different variables");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

IntegerPolynomial operator*(const IntegerPolynomial& a, const IntegerPolynomial& b) {
  if (a.variables_ != b.variables_) throw ContractError("polynomials over different variables");
  IntegerPolynomial r(a.variables_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      IntegerPolynomial::Exponents e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

IntegerPolynomial IntegerPolynomial::operator-() const {
  IntegerPolynomial r(variables_);
  for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

IntegerPolynomial IntegerPolynomial::pow(unsigned k) const {
  IntegerPolynomial r = constant(1, variables_);
  for (unsigned i = 0; i < k; ++i) r = r * *this;
  return r;
}

int IntegerPolynomial::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

bool IntegerPolynomial::is_homogeneous() const {
  const int d = degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const auto& t) { return std::accumulate(t.first.begin(), t.first.end(), 0) == d; });
}

Integer IntegerPolynomial::evaluate(const std::vector<Integer>& x) const {
  if (x.size() != variables_.size()) throw ContractError("point has the wrong dimension");
  Integer sum = 0;
  for (const auto& [e, c] : terms_) {
    Integer t = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) {
        Integer power;
        mpz_pow_ui(power.get_mpz_t(), x[i].get_mpz_t(), static_cast<unsigned long>(e[i]));
        t *= power;
      }
    sum += t;
  }
  return sum;
}

std::int64_t IntegerPolynomial::evaluate_mod(const std::vector<std::int64_t>& x, std::int64_t modulus) const {
  if (x.size() != variables_.size()) throw ContractError("point has the wrong dimension");
  using wide = __int128;
  auto mulmod = [&](std::int64_t a, std::int64_t b) { return static_cast<std::int64_t>(wide(a) * b % modulus); };
  std::int64_t sum = 0;
  for (const auto& [e, c] : terms_) {
    Integer cr = c % modulus;
    if (cr < 0) cr += modulus;
    std::int64_t t = cr.get_si();
    for (std::size_t i = 0; i < e.size() && t; ++i)
      for (int k = 0; k < e[i]; ++k) t = mulmod(t, mod(x[i], modulus));
    sum = (sum + t) % modulus;
  }
  return sum;
}

std::string IntegerPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  // Highest total degree first, then lexicographically descending.
  std::vector<std::pair<Exponents, Integer>> ordered(terms_.rbegin(), terms_.rend());
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    return std::accumulate(a.first.begin(), a.first.end(), 0) > std::accumulate(b.first.begin(), b.first.end(), 0);
  });
  for (const auto& [e, c] : ordered) {
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      if (!mono.empty()) mono += '*';
      mono += variables_[i];
      if (e[i] > 1) mono += '^' + std::to_string(e[i]);
    }
    const Integer a = abs(c);
    std::string coeff = (a == 1 && !mono.empty()) ? "" : a.get_str() + (mono.empty() ? "" : "*");
    if (out.empty())
      out = (c < 0 ? "-" : "") + coeff + mono;
    else
      out += (c < 0 ? " - " : " + ") + coeff + mono;
  }
  return out;
}

namespace {

struct Token {
  enum Kind { number, name, symbol, end } kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char ch = s[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Token::number, s.substr(i, j - i), i});
      i = j;
    } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Token::name, s.substr(i, j - i), i});
      i = j;
    } else if (std::string("+-*^()").find(ch) != std::string::npos) {
      out.push_back({Token::symbol, std::string(1, ch), i});
      ++i;
    } else {
      throw MalformedInput("unexpected character '" + std::string(1, ch) + "' at position " + std::to_string(i));
    }
  }
  out.push_back({Token::end, "", s.size()});
  return out;
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, std::vector<std::string> variables)
      : tokens_(std::move(tokens)), variables_(std::move(variables)) {}

  IntegerPolynomial run() {
    auto p = expression();
    if (peek().kind != Token::end) fail("unexpected '" + peek().text + "'");
    return p;
  }

 private:
  const Token& peek() const { return tokens_[at_]; }
  bool accept(const std::string& sym) {
    if (peek().kind == Token::symbol && peek().text == sym) {
      ++at_;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw MalformedInput("polynomial syntax: " + what + " at position " + std::to_string(peek().pos));
  }

  IntegerPolynomial expression() {
    auto p = term();
    while (true) {
      if (accept("+"))
        p += term();
      else if (accept("-"))
        p -= term();
      else
        return p;
    }
  }

  IntegerPolynomial term() {
    auto p = unary();
    while (accept("*")) p = p * unary();
    return p;
  }

  IntegerPolynomial unary() {
    if (accept("-")) return -unary();
    if (accept("+")) return unary();
    return power();
  }

  IntegerPolynomial power() {
    auto base = primary();
    if (!accept("^")) return base;
    if (peek().kind != Token::number) fail("exponent must be a non-negative integer");
    const auto e = std::stoul(tokens_[at_++].text);
    if (e > 1000) fail("exponent too large");
    return base.pow(static_cast<unsigned>(e));
  }

  IntegerPolynomial primary() {
    const Token t = peek();
    if (t.kind == Token::number) {
      ++at_;
      return IntegerPolynomial::constant(Integer(t.text), variables_);
    }
    if (t.kind == Token::name) {
      ++at_;
      auto it = std::find(variables_.begin(), variables_.end(), t.text);
      if (it == variables_.end()) fail("unknown variable '" + t.text + "'");
      return IntegerPolynomial::variable(static_cast<int>(it - variables_.begin()), variables_);
    }
    if (accept("(")) {
      auto p = expression();
      if (!accept(")")) fail("missing ')'");
      return p;
    }
    fail(t.kind == Token::end ? "unexpected end of input" : "unexpected '" + t.text + "'");
  }

  std::vector<Token> tokens_;
  std::vector<std::string> variables_;
  std::size_t at_ = 0;
};

}  // namespace

IntegerPolynomial IntegerPolynomial::parse(const std::string& text, std::vector<std::string> variables) {
  auto tokens = tokenize(text);
  if (variables.empty()) {
    std::set<std::string> names;
    for (const auto& t : tokens)
      if (t.kind == Token::name) names.insert(t.text);
    variables.assign(names.begin(), names.end());
  } else if (std::set<std::string>(variables.begin(), variables.end()).size() != variables.size()) {
    throw MalformedInput("repeated variable name");
  }
  return Parser(std::move(tokens), std::move(variables)).run();
}

}  // namespace ringzeta
