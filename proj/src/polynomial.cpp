#include "nilkur/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace nilkur {

std::string Var::name() const {
  if (id == 0) return "u";
  return "t" + std::to_string(row()) + "_" + std::to_string(col());
}

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(Var v, std::uint32_t exponent) {
  if (exponent > 0) {
    factors_.emplace_back(v.id, exponent);
    degree_ = exponent;
  }
}

std::uint32_t Monomial::exponent(Var v) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), Factor{v.id, 0},
                             [](const Factor& a, const Factor& b) { return a.first < b.first; });
  return (it != factors_.end() && it->first == v.id) ? it->second : 0;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  out.factors_.reserve(factors_.size() + other.factors_.size());
  auto a = factors_.begin();
  auto b = other.factors_.begin();
  while (a != factors_.end() || b != other.factors_.end()) {
    if (b == other.factors_.end() || (a != factors_.end() && a->first < b->first)) {
      out.factors_.push_back(*a++);
    } else if (a == factors_.end() || b->first < a->first) {
      out.factors_.push_back(*b++);
    } else {
      out.factors_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  out.degree_ = degree_ + other.degree_;
  return out;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  auto b = other.factors_.begin();
  for (const auto& [v, e] : factors_) {
    while (b != other.factors_.end() && b->first < v) ++b;
    if (b == other.factors_.end() || b->first != v || b->second < e) return false;
  }
  return true;
}

std::string Monomial::to_string() const {
  if (factors_.empty()) return "1";
  std::string s;
  for (const auto& [v, e] : factors_) {
    if (!s.empty()) s += '*';
    s += Var{v}.name();
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

int grevlex_compare(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  auto ia = fa.rbegin();
  auto ib = fb.rbegin();
  // scan from the last (smallest) variable; smaller exponent there wins
  while (ia != fa.rend() && ib != fb.rend()) {
    if (ia->first == ib->first) {
      if (ia->second != ib->second) return ia->second < ib->second ? 1 : -1;
      ++ia;
      ++ib;
    } else if (ia->first > ib->first) {
      return -1;
    } else {
      return 1;
    }
  }
  if (ia != fa.rend()) return -1;
  if (ib != fb.rend()) return 1;
  return 0;
}

// -------------------------------------------------------------- Polynomial

Polynomial::Polynomial(const Rational& c) {
  if (sgn(c) == 0) return;
  terms_.push_back({Monomial{}, c});
  terms_.back().coeff.canonicalize();
}

Polynomial Polynomial::variable(Var v) {
  Polynomial p;
  p.terms_.push_back({Monomial(v), Rational(1)});
  return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  std::map<Monomial, Rational, GrevlexGreater> acc;
  for (auto& t : terms) acc[t.monomial] += t.coeff;
  Polynomial p;
  for (auto& [m, c] : acc)
    if (sgn(c) != 0) p.terms_.push_back({m, c});
  return p;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max<int>(d, int(t.monomial.degree()));
  return d;
}

bool Polynomial::is_homogeneous() const {
  for (const auto& t : terms_)
    if (t.monomial.degree() != terms_.front().monomial.degree()) return false;
  return true;
}

Polynomial Polynomial::homogeneous_part(unsigned d) const {
  Polynomial p;
  for (const auto& t : terms_)
    if (t.monomial.degree() == d) p.terms_.push_back(t);
  return p;
}

const Polynomial::Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw std::logic_error("leading_term of zero polynomial");
  return terms_.front();
}

std::set<Var> Polynomial::variables() const {
  std::set<Var> vs;
  for (const auto& t : terms_)
    for (const auto& f : t.monomial.factors()) vs.insert(Var{f.first});
  return vs;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

void Polynomial::add_scaled(const Polynomial& other, const Rational& c) {
  if (sgn(c) == 0 || other.is_zero()) return;
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    int cmp;
    if (a == terms_.end()) cmp = -1;
    else if (b == other.terms_.end()) cmp = 1;
    else cmp = grevlex_compare(a->monomial, b->monomial);
    if (cmp > 0) {
      out.push_back(std::move(*a++));
    } else if (cmp < 0) {
      out.push_back({b->monomial, b->coeff * c});
      ++b;
    } else {
      Rational s = a->coeff + b->coeff * c;
      if (sgn(s) != 0) out.push_back({std::move(a->monomial), std::move(s)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  add_scaled(other, Rational(1));
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  add_scaled(other, Rational(-1));
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coeff *= c;
  }
  return *this;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  Polynomial p = *this;
  p += other;
  return p;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  Polynomial p = *this;
  p -= other;
  return p;
}

Polynomial Polynomial::operator*(const Rational& c) const {
  Polynomial p = *this;
  p *= c;
  return p;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  if (is_zero() || other.is_zero()) return {};
  if (other.is_constant()) return *this * other.terms_.front().coeff;
  if (is_constant()) return other * terms_.front().coeff;
  std::map<Monomial, Rational, GrevlexGreater> acc;
  for (const auto& a : terms_)
    for (const auto& b : other.terms_) acc[a.monomial * b.monomial] += a.coeff * b.coeff;
  Polynomial p;
  p.terms_.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (sgn(c) != 0) p.terms_.push_back({m, c});
  return p;
}

Rational Polynomial::evaluate(const std::map<Var, Rational>& point) const {
  Rational total = 0;
  for (const auto& t : terms_) {
    Rational v = t.coeff;
    for (const auto& [id, e] : t.monomial.factors()) {
      auto it = point.find(Var{id});
      if (it == point.end()) throw std::out_of_range("evaluate: no value for " + Var{id}.name());
      for (std::uint32_t k = 0; k < e; ++k) v *= it->second;
    }
    total += v;
  }
  return total;
}

Rational Polynomial::evaluate(std::span<const Rational> point, unsigned cols) const {
  Rational total = 0;
  for (const auto& t : terms_) {
    Rational v = t.coeff;
    for (const auto& [id, e] : t.monomial.factors()) {
      const Var var{id};
      if (var.row() == 0 || var.col() == 0 || var.col() > cols)
        throw std::out_of_range("evaluate: variable " + var.name() + " outside the t-grid");
      const std::size_t idx = std::size_t(var.row() - 1) * cols + (var.col() - 1);
      if (idx >= point.size()) throw std::out_of_range("evaluate: variable " + var.name() + " outside the t-grid");
      for (std::uint32_t k = 0; k < e; ++k) v *= point[idx];
    }
    total += v;
  }
  return total;
}

Polynomial Polynomial::substitute(const std::function<Polynomial(Var)>& image) const {
  Polynomial out;
  for (const auto& t : terms_) {
    Polynomial term(t.coeff);
    for (const auto& [id, e] : t.monomial.factors()) {
      const Polynomial img = image(Var{id});
      for (std::uint32_t k = 0; k < e; ++k) term = term * img;
    }
    out += term;
  }
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : terms_) {
    const bool neg = sgn(t.coeff) < 0;
    if (first) {
      if (neg) s += '-';
    } else {
      s += neg ? " - " : " + ";
    }
    const Rational mag = abs(t.coeff);
    if (t.monomial.is_one()) {
      s += mag.get_str();
    } else if (mag == 1) {
      s += t.monomial.to_string();
    } else {
      s += mag.get_str() + "*" + t.monomial.to_string();
    }
    first = false;
  }
  return s;
}

// ------------------------------------------------------------- shorthands

namespace {

void check_index(unsigned i) {
  if (i == 0) throw std::invalid_argument("t-variable indices start at 1");
}

}  // namespace

Polynomial minor2(unsigned i, unsigned j, unsigned k, unsigned l) {
  for (unsigned x : {i, j, k, l}) check_index(x);
  return Polynomial::t(i, k) * Polynomial::t(j, l) - Polynomial::t(i, l) * Polynomial::t(j, k);
}

Polynomial minor3(unsigned i, unsigned j, unsigned k, unsigned l, unsigned m, unsigned n) {
  for (unsigned x : {i, j, k, l, m, n}) check_index(x);
  const unsigned cols[3] = {i, j, k};
  const unsigned rows[3] = {l, m, n};
  auto e = [&](int r, int c) { return Polynomial::t(cols[c], rows[r]); };
  // cofactor expansion along the first row
  return e(0, 0) * (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1)) - e(0, 1) * (e(1, 0) * e(2, 2) - e(1, 2) * e(2, 0)) +
         e(0, 2) * (e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0));
}

Polynomial normalize(const Polynomial& p) {
  if (p.is_zero()) return p;
  Integer num_gcd = 0;
  Integer den_lcm = 1;
  for (const auto& t : p.terms()) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den_mpz_t());
  }
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (sgn(p.leading_term().coeff) < 0) scale = -scale;
  return p * scale;
}

// ------------------------------------------------------------------ parser

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view s) : s_(s) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos_) + ": " + what + " in '" +
                                std::string(s_) + "'");
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  bool starts_with(std::string_view word) {
    skip_ws();
    return s_.substr(pos_).starts_with(word);
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string digits() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(s_.substr(start, pos_ - start));
  }

  unsigned number() {
    const std::string d = digits();
    if (d.size() > 6) fail("index or exponent too large");
    return unsigned(std::stoul(d));
  }

  Polynomial expr() {
    Polynomial result;
    char c = peek();
    Rational sign = 1;
    if (c == '+' || c == '-') {
      sign = c == '-' ? -1 : 1;
      ++pos_;
    }
    result.add_scaled(term(), sign);
    for (;;) {
      c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      result.add_scaled(term(), c == '-' ? Rational(-1) : Rational(1));
    }
    return result;
  }

  bool starts_factor() {
    const char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || c == 't' || c == 'u' || c == '(' || c == 'd' || c == 'D';
  }

  Polynomial term() {
    Polynomial p = power();
    for (;;) {
      if (peek() == '*') {
        ++pos_;
        p = p * power();
      } else if (starts_factor()) {
        p = p * power();
      } else {
        break;
      }
    }
    return p;
  }

  Polynomial power() {
    Polynomial base = factor();
    if (peek() == '^') {
      ++pos_;
      const unsigned e = number();
      Polynomial r(1);
      for (unsigned k = 0; k < e; ++k) r = r * base;
      return r;
    }
    return base;
  }

  std::vector<unsigned> index_digits(std::size_t count) {
    const std::string d = digits();
    if (d.size() != count) fail("expected " + std::to_string(count) + " single-digit indices");
    std::vector<unsigned> out;
    for (char c : d) out.push_back(unsigned(c - '0'));
    return out;
  }

  Polynomial factor() {
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string lit = digits();
      if (peek() == '/' && pos_ + 1 < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
        ++pos_;
        lit += "/" + digits();
      }
      return Polynomial(parse_rational(lit));
    }
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      expect(')');
      return p;
    }
    if (starts_with("delta(")) {
      pos_ += 6;
      auto lower = index_digits(2);
      expect(';');
      auto upper = index_digits(2);
      expect(')');
      return minor2(lower[0], lower[1], upper[0], upper[1]);
    }
    if (starts_with("Delta(")) {
      pos_ += 6;
      auto lower = index_digits(3);
      expect(';');
      auto upper = index_digits(3);
      expect(')');
      return minor3(lower[0], lower[1], lower[2], upper[0], upper[1], upper[2]);
    }
    if (c == 't') {
      ++pos_;
      const unsigned i = number();
      if (pos_ >= s_.size() || s_[pos_] != '_') fail("expected '_' in variable name");
      ++pos_;
      const unsigned j = number();
      if (i == 0 || j == 0 || i > 0xFFFF || j > 0xFFFF) fail("variable index out of range");
      return Polynomial::t(i, j);
    }
    if (c == 'u') {
      ++pos_;
      return Polynomial::variable(Var::aux());
    }
    fail("expected a factor");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text) { return PolyParser(text).parse(); }

std::vector<Polynomial> parse_polynomial_lines(std::string_view text) {
  std::vector<Polynomial> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.front()))) line.remove_prefix(1);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.remove_suffix(1);
    if (!line.empty()) out.push_back(parse_polynomial(line));
    start = end + 1;
  }
  return out;
}

// ----------------------------------------------------------------- ideals

IdealGens::IdealGens(const std::vector<Polynomial>& gens) {
  for (const auto& g : gens) {
    Polynomial n = normalize(g);
    if (n.is_zero()) continue;
    if (std::find(gens_.begin(), gens_.end(), n) == gens_.end()) gens_.push_back(std::move(n));
  }
}

std::set<Var> IdealGens::variables() const {
  std::set<Var> vs;
  for (const auto& g : gens_) {
    auto v = g.variables();
    vs.insert(v.begin(), v.end());
  }
  return vs;
}

}  // namespace nilkur
