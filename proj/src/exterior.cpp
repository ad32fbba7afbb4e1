#include "nilkur/exterior.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace nilkur {

namespace {

std::vector<unsigned> positions(Mask m) {
  std::vector<unsigned> out;
  while (m) {
    out.push_back(unsigned(std::countr_zero(m)));
    m &= m - 1;
  }
  return out;
}

void check_ambient(unsigned a, unsigned b) {
  if (a != 0 && b != 0 && a != b) throw std::invalid_argument("forms live in different exterior algebras");
}

std::string covector_name(unsigned n, unsigned bit) {
  return bit < n ? "w" + std::to_string(bit + 1) : "cw" + std::to_string(bit - n + 1);
}

std::string mask_name(unsigned n, Mask m) {
  if (m == 0) return "1";
  std::string out;
  for (unsigned p : positions(m)) {
    if (!out.empty()) out += '^';
    out += covector_name(n, p);
  }
  return out;
}

// Splits a coefficient into a sign and a printable prefix ("" for +-1).
std::pair<bool, std::string> coefficient_prefix(const Polynomial& c) {
  if (c.is_constant()) {
    const Rational v = c.is_zero() ? Rational(0) : c.terms()[0].coeff;
    const bool neg = sgn(v) < 0;
    const Rational a = neg ? Rational(-v) : v;
    return {neg, a == 1 ? std::string() : a.get_str()};
  }
  if (c.size() == 1) {
    const auto& t = c.terms()[0];
    const bool neg = sgn(t.coeff) < 0;
    const Rational a = neg ? Rational(-t.coeff) : t.coeff;
    return {neg, (a == 1 ? std::string() : a.get_str() + "*") + t.monomial.to_string()};
  }
  return {false, "(" + c.to_string() + ")"};
}

// Multi-index order: lexicographic on the sorted covector positions.
bool multi_index_less(Mask a, Mask b) { return positions(a) < positions(b); }

std::string join_terms(const std::vector<std::pair<bool, std::string>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& [neg, body] = terms[i];
    if (i == 0) out += neg ? "-" : "";
    else out += neg ? " - " : " + ";
    out += body;
  }
  return out;
}

}  // namespace

// ------------------------------------------------------------------- Form

int wedge_sign(Mask a, Mask b) {
  unsigned inversions = 0;
  for (unsigned y : positions(b)) inversions += unsigned(std::popcount(a >> (y + 1)));
  return inversions % 2 ? -1 : 1;
}

Form Form::monomial(unsigned n, const std::vector<Covector>& covectors, const Polynomial& coeff) {
  Form f(n);
  Mask m = 0;
  int sign = 1;
  for (const auto& c : covectors) {
    if (c.index >= n) throw std::out_of_range("covector index out of range");
    const Mask bit = Mask(1) << (c.barred ? n + c.index : c.index);
    if (m & bit) return f;
    sign *= wedge_sign(m, bit);
    m |= bit;
  }
  f.add_term(m, coeff * Rational(sign));
  return f;
}

Form Form::basis(unsigned n, Mask mask, const Polynomial& coeff) {
  Form f(n);
  f.add_term(mask, coeff);
  return f;
}

Polynomial Form::coefficient(Mask mask) const {
  auto it = terms_.find(mask);
  return it == terms_.end() ? Polynomial() : it->second;
}

std::pair<unsigned, unsigned> Form::bidegree(Mask mask) const {
  const Mask low = (Mask(1) << n_) - 1;
  return {unsigned(std::popcount(mask & low)), unsigned(std::popcount(mask >> n_))};
}

void Form::add_term(Mask mask, const Polynomial& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(mask, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Form& Form::operator+=(const Form& other) {
  check_ambient(n_, other.n_);
  if (n_ == 0) n_ = other.n_;
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Form& Form::operator-=(const Form& other) {
  check_ambient(n_, other.n_);
  if (n_ == 0) n_ = other.n_;
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Form Form::operator+(const Form& other) const {
  Form out = *this;
  out += other;
  return out;
}

Form Form::operator-(const Form& other) const {
  Form out = *this;
  out -= other;
  return out;
}

Form Form::operator-() const {
  Form out(n_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

Form Form::operator*(const Polynomial& c) const {
  Form out(n_);
  if (c.is_zero()) return out;
  for (const auto& [m, p] : terms_) out.add_term(m, p * c);
  return out;
}

Form Form::component(unsigned p, unsigned q) const {
  Form out(n_);
  for (const auto& [m, c] : terms_)
    if (bidegree(m) == std::pair{p, q}) out.terms_.emplace(m, c);
  return out;
}

std::string Form::to_string() const {
  std::vector<Mask> masks;
  for (const auto& [m, c] : terms_) masks.push_back(m);
  std::sort(masks.begin(), masks.end(), multi_index_less);
  std::vector<std::pair<bool, std::string>> parts;
  for (Mask m : masks) {
    auto [neg, prefix] = coefficient_prefix(terms_.at(m));
    const std::string name = mask_name(n_, m);
    if (m == 0) parts.emplace_back(neg, prefix.empty() ? "1" : prefix);
    else parts.emplace_back(neg, prefix.empty() ? name : prefix + "*" + name);
  }
  return join_terms(parts);
}

Form wedge(const Form& a, const Form& b) {
  check_ambient(a.ambient(), b.ambient());
  Form out(std::max(a.ambient(), b.ambient()));
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      if (ma & mb) continue;
      out.add_term(ma | mb, ca * cb * Rational(wedge_sign(ma, mb)));
    }
  }
  return out;
}

Form contract(unsigned j, bool barred, const Form& f) {
  const unsigned n = f.ambient();
  Form out(n);
  if (f.is_zero()) return out;
  if (j >= n) throw std::out_of_range("contract: vector index out of range");
  const unsigned bit = barred ? n + j : j;
  const Mask b = Mask(1) << bit;
  for (const auto& [m, c] : f.terms()) {
    if (!(m & b)) continue;
    const int sign = std::popcount(m & (b - 1)) % 2 ? -1 : 1;
    out.add_term(m & ~b, sign > 0 ? c : -c);
  }
  return out;
}

// ------------------------------------------------------------- VectorForm

VectorForm VectorForm::simple(const Form& f, unsigned vector_index) {
  VectorForm v(f.ambient());
  v.add(vector_index, f);
  return v;
}

Form VectorForm::component(unsigned vector_index) const {
  auto it = comps_.find(vector_index);
  return it == comps_.end() ? Form(n_) : it->second;
}

bool VectorForm::has_barred_vectors() const {
  return std::any_of(comps_.begin(), comps_.end(), [&](const auto& kv) { return kv.first >= n_; });
}

void VectorForm::add(unsigned vector_index, const Form& f) {
  if (f.is_zero()) return;
  check_ambient(n_, f.ambient());
  if (n_ == 0) n_ = f.ambient();
  if (vector_index >= 2 * n_) throw std::out_of_range("VectorForm: vector index out of range");
  auto [it, inserted] = comps_.try_emplace(vector_index, f);
  if (!inserted) {
    it->second += f;
    if (it->second.is_zero()) comps_.erase(it);
  }
}

VectorForm& VectorForm::operator+=(const VectorForm& other) {
  for (const auto& [j, f] : other.comps_) add(j, f);
  return *this;
}

VectorForm& VectorForm::operator-=(const VectorForm& other) {
  for (const auto& [j, f] : other.comps_) add(j, -f);
  return *this;
}

VectorForm VectorForm::operator+(const VectorForm& other) const {
  VectorForm out = *this;
  out += other;
  return out;
}

VectorForm VectorForm::operator-(const VectorForm& other) const {
  VectorForm out = *this;
  out -= other;
  return out;
}

VectorForm VectorForm::operator*(const Polynomial& c) const {
  VectorForm out(n_);
  for (const auto& [j, f] : comps_) out.add(j, f * c);
  return out;
}

std::string VectorForm::to_string() const {
  std::vector<std::pair<bool, std::string>> parts;
  for (const auto& [j, f] : comps_) {
    const std::string vec = j < n_ ? "X" + std::to_string(j + 1) : "cX" + std::to_string(j - n_ + 1);
    std::vector<Mask> masks;
    for (const auto& [m, c] : f.terms()) masks.push_back(m);
    std::sort(masks.begin(), masks.end(), multi_index_less);
    for (Mask m : masks) {
      auto [neg, prefix] = coefficient_prefix(f.terms().at(m));
      std::string body = prefix.empty() ? "" : prefix + "*";
      if (m != 0) body += "(" + mask_name(n_, m) + ")*";
      parts.emplace_back(neg, body + vec);
    }
  }
  return join_terms(parts);
}

// -------------------------------------------------------- ExteriorAlgebra

ExteriorAlgebra::ExteriorAlgebra(const ComplexStructureAlgebra& H)
    : n_(unsigned(H.dim_complex())),
      parallelisable_(classify_complex_structure(H) == ComplexStructureKind::parallelisable),
      hc_(H.complexification()) {
  if (2 * n_ > 64) throw std::invalid_argument("ExteriorAlgebra: complex dimension above 32");
  const std::size_t N = 2 * n_;
  d_cov_.resize(N);
  for (std::size_t k = 0; k < N; ++k)
    for (std::size_t a = 0; a < N; ++a)
      for (std::size_t b = a + 1; b < N; ++b) {
        const Rational c = hc_.differential_coeff(k, a, b);
        if (sgn(c) != 0) d_cov_[k].emplace_back((Mask(1) << a) | (Mask(1) << b), c);
      }
}

ExteriorAlgebra::ExteriorAlgebra(const LieAlgebra& L) : ExteriorAlgebra(to_complex_structure(L)) {}

std::vector<std::pair<Mask, Rational>> ExteriorAlgebra::d_basis(Mask mask) const {
  if (mask == 0) return {};
  const unsigned low = unsigned(std::countr_zero(mask));
  const Mask first = Mask(1) << low;
  const Mask rest = mask & ~first;
  std::map<Mask, Rational> acc;
  // d(e_low ^ rest) = d(e_low) ^ rest - e_low ^ d(rest)
  for (const auto& [m, c] : d_cov_[low]) {
    if (m & rest) continue;
    acc[m | rest] += c * wedge_sign(m, rest);
  }
  for (const auto& [m, c] : d_basis(rest)) {
    if (m & first) continue;
    acc[first | m] -= c * wedge_sign(first, m);
  }
  std::vector<std::pair<Mask, Rational>> out;
  for (auto& [m, c] : acc)
    if (sgn(c) != 0) out.emplace_back(m, c);
  return out;
}

Form ExteriorAlgebra::d(const Form& f) const {
  check_ambient(n_, f.ambient());
  Form out(n_);
  for (const auto& [m, c] : f.terms())
    for (const auto& [dm, dc] : d_basis(m)) out.add_term(dm, c * dc);
  return out;
}

Form ExteriorAlgebra::del(const Form& f) const {
  Form out(n_);
  for (const auto& [m, c] : f.terms()) {
    const auto [p, q] = f.bidegree(m);
    for (const auto& [dm, dc] : d_basis(m)) {
      const auto [dp, dq] = out.bidegree(dm);
      if (dp == p + 1 && dq == q) out.add_term(dm, c * dc);
    }
  }
  return out;
}

Form ExteriorAlgebra::delbar(const Form& f) const {
  Form out(n_);
  for (const auto& [m, c] : f.terms()) {
    const auto [p, q] = f.bidegree(m);
    for (const auto& [dm, dc] : d_basis(m)) {
      const auto [dp, dq] = out.bidegree(dm);
      if (dp == p && dq == q + 1) out.add_term(dm, c * dc);
    }
  }
  return out;
}

Form ExteriorAlgebra::lie_derivative(unsigned j, bool barred, const Form& f) const {
  // Cartan: L_X = i_X d + d i_X
  Form g = f;
  if (g.ambient() == 0) g = Form(n_);
  return contract(j, barred, d(g)) + d(contract(j, barred, g));
}

Vector ExteriorAlgebra::bracket(unsigned a, unsigned b) const { return hc_.bracket_basis(a, b); }

// ---------------------------------------------------------------- Schouten

namespace {

void require_01_with_10_values(const VectorForm& v, unsigned n, const char* who) {
  for (const auto& [j, f] : v.components()) {
    if (j >= n) throw std::invalid_argument(std::string(who) + ": barred vector component");
    for (const auto& [m, c] : f.terms())
      if (f.bidegree(m) != std::pair{0u, 1u}) throw std::invalid_argument(std::string(who) + ": expected (0,1)-forms");
  }
}

void add_bracket_term(VectorForm& out, const ExteriorAlgebra& E, const Form& ab, unsigned x, unsigned y) {
  const Vector br = E.bracket(x, y);
  for (unsigned k = 0; k < br.size(); ++k)
    if (sgn(br[k]) != 0) out.add(k, ab * Polynomial(br[k]));
}

}  // namespace

VectorForm schouten_parallelisable(const ExteriorAlgebra& E, const VectorForm& a, const VectorForm& b) {
  if (!E.parallelisable())
    throw std::invalid_argument("schouten_parallelisable: ambient structure is not parallelisable");
  const unsigned n = E.n();
  require_01_with_10_values(a, n, "schouten_parallelisable");
  require_01_with_10_values(b, n, "schouten_parallelisable");
  VectorForm out(n);
  for (const auto& [x, fa] : a.components())
    for (const auto& [y, fb] : b.components()) add_bracket_term(out, E, wedge(fa, fb), x, y);
  return out;
}

VectorForm schouten_general(const ExteriorAlgebra& E, const VectorForm& a, const VectorForm& b) {
  const unsigned n = E.n();
  require_01_with_10_values(a, n, "schouten_general");
  require_01_with_10_values(b, n, "schouten_general");
  VectorForm out(n);
  for (const auto& [x, fa] : a.components()) {
    const Form del_a = E.del(fa);
    for (const auto& [y, fb] : b.components()) {
      out.add(x, wedge(fb, contract(y, false, del_a)));
      out.add(y, wedge(fa, contract(x, false, E.del(fb))));
      add_bracket_term(out, E, wedge(fa, fb), x, y);
    }
  }
  return out;
}

}  // namespace nilkur
