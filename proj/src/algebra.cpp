#include "nilkur/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <utility>

namespace nilkur {

JacobiViolation::JacobiViolation(std::size_t i_, std::size_t j_, std::size_t k_)
    : std::runtime_error("Jacobi identity fails for (X" + std::to_string(i_ + 1) + ", X" + std::to_string(j_ + 1) +
                         ", X" + std::to_string(k_ + 1) + ")"),
      i(i_),
      j(j_),
      k(k_) {}

// -------------------------------------------------------------- LieAlgebra

LieAlgebra::LieAlgebra(std::size_t dim, const std::vector<Bracket>& brackets, std::string name,
                       std::vector<std::string> labels)
    : dim_(dim), c_(dim * dim * dim), name_(std::move(name)), labels_(std::move(labels)) {
  if (dim == 0) throw std::invalid_argument("LieAlgebra: dimension must be positive");
  if (labels_.empty())
    for (std::size_t i = 0; i < dim; ++i) labels_.push_back("X" + std::to_string(i + 1));
  if (labels_.size() != dim) throw std::invalid_argument("LieAlgebra: wrong number of basis labels");
  for (const auto& b : brackets) {
    if (b.i >= dim || b.j >= dim || b.coeffs.size() != dim)
      throw std::invalid_argument("LieAlgebra: bracket index out of range");
    if (b.i == b.j) {
      for (const auto& x : b.coeffs)
        if (sgn(x) != 0) throw std::invalid_argument("LieAlgebra: [X_i, X_i] must vanish");
      continue;
    }
    for (std::size_t k = 0; k < dim; ++k) {
      c_[(b.i * dim + b.j) * dim + k] += b.coeffs[k];
      c_[(b.j * dim + b.i) * dim + k] -= b.coeffs[k];
    }
  }
}

LieAlgebra LieAlgebra::abelian(std::size_t dim) { return LieAlgebra(dim, {}, "a_" + std::to_string(dim)); }

LieAlgebra LieAlgebra::free_two_step(std::size_t m) {
  if (m < 2) throw std::invalid_argument("free_two_step: need at least two generators");
  const std::size_t dim = m + m * (m - 1) / 2;
  std::vector<Bracket> brackets;
  std::size_t next = m;
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      Vector v(dim);
      v[next++] = 1;
      brackets.push_back({a, b, std::move(v)});
    }
  }
  return LieAlgebra(dim, brackets, "b_" + std::to_string(m));
}

LieAlgebra LieAlgebra::direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  const std::size_t n = a.dim() + b.dim();
  std::vector<Bracket> brackets;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i + 1; j < a.dim(); ++j) {
      Vector v(n);
      for (std::size_t k = 0; k < a.dim(); ++k) v[k] = a.constant(i, j, k);
      brackets.push_back({i, j, std::move(v)});
    }
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = i + 1; j < b.dim(); ++j) {
      Vector v(n);
      for (std::size_t k = 0; k < b.dim(); ++k) v[a.dim() + k] = b.constant(i, j, k);
      brackets.push_back({a.dim() + i, a.dim() + j, std::move(v)});
    }
  return LieAlgebra(n, brackets, a.name() + "+" + b.name());
}

Vector LieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
  Vector v(dim_);
  for (std::size_t k = 0; k < dim_; ++k) v[k] = constant(i, j, k);
  return v;
}

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const {
  Vector out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (sgn(y[j]) == 0 || i == j) continue;
      const Rational f = x[i] * y[j];
      for (std::size_t k = 0; k < dim_; ++k)
        if (sgn(constant(i, j, k)) != 0) out[k] += f * constant(i, j, k);
    }
  }
  return out;
}

bool LieAlgebra::is_abelian() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return sgn(q) == 0; });
}

std::string LieAlgebra::salamon() const {
  if (dim_ > 9) throw std::invalid_argument("salamon(): dimension above 9");
  std::string out = "(";
  for (std::size_t k = 0; k < dim_; ++k) {
    if (k) out += ',';
    std::string entry;
    for (std::size_t a = 0; a < dim_; ++a) {
      for (std::size_t b = a + 1; b < dim_; ++b) {
        const Rational coef = differential_coeff(k, a, b);
        if (sgn(coef) == 0) continue;
        if (coef.get_den() != 1) throw std::invalid_argument("salamon(): non-integer structure constant");
        if (sgn(coef) < 0) entry += '-';
        else if (!entry.empty()) entry += '+';
        if (abs(coef) != 1) entry += Rational(abs(coef)).get_str() + "*";
        entry += std::to_string(a + 1) + std::to_string(b + 1);
      }
    }
    out += entry.empty() ? "0" : entry;
  }
  return out + ")";
}

// ------------------------------------------------ ComplexStructureAlgebra

ComplexStructureAlgebra::ComplexStructureAlgebra(std::size_t dim_complex, std::vector<Matrix> holo,
                                                 std::vector<Matrix> mixed, std::string name)
    : n_(dim_complex), holo_(std::move(holo)), mixed_(std::move(mixed)), name_(std::move(name)) {
  if (n_ == 0) throw std::invalid_argument("ComplexStructureAlgebra: dimension must be positive");
  if (holo_.size() != n_ || mixed_.size() != n_)
    throw std::invalid_argument("ComplexStructureAlgebra: need one differential per covector");
  for (std::size_t k = 0; k < n_; ++k) {
    if (holo_[k].rows() != n_ || holo_[k].cols() != n_ || mixed_[k].rows() != n_ || mixed_[k].cols() != n_)
      throw std::invalid_argument("ComplexStructureAlgebra: coefficient matrices must be n x n");
    // keep (2,0) coefficients in the upper triangle only
    for (std::size_t a = 0; a < n_; ++a) {
      if (sgn(holo_[k](a, a)) != 0) throw std::invalid_argument("ComplexStructureAlgebra: w^a ^ w^a term");
      for (std::size_t b = 0; b < a; ++b) {
        holo_[k](b, a) -= holo_[k](a, b);
        holo_[k](a, b) = 0;
      }
    }
  }
}

Vector ComplexStructureAlgebra::bracket_holo(std::size_t a, std::size_t b) const {
  Vector v(n_);
  if (a == b) return v;
  const Rational sign = a < b ? -1 : 1;
  const std::size_t lo = std::min(a, b), hi = std::max(a, b);
  for (std::size_t k = 0; k < n_; ++k) v[k] = sign * holo_[k](lo, hi);
  return v;
}

Vector ComplexStructureAlgebra::bracket_mixed_10(std::size_t b, std::size_t j) const {
  Vector v(n_);
  for (std::size_t k = 0; k < n_; ++k) v[k] = -mixed_[k](b, j);
  return v;
}

LieAlgebra ComplexStructureAlgebra::complexification() const {
  const std::size_t N = 2 * n_;
  std::map<std::pair<std::size_t, std::size_t>, Vector> br;
  auto add = [&](std::size_t p, std::size_t q, std::size_t r, const Rational& c) {
    if (sgn(c) == 0) return;
    auto& v = br[{p, q}];
    if (v.empty()) v.resize(N);
    v[r] += c;
  };
  for (std::size_t k = 0; k < n_; ++k) {
    for (std::size_t a = 0; a < n_; ++a) {
      for (std::size_t b = 0; b < n_; ++b) {
        if (a < b) {
          add(a, b, k, -holo_[k](a, b));
          add(n_ + a, n_ + b, n_ + k, -holo_[k](a, b));
        }
        // cw^a ^ w^b = -(w^b ^ cw^a) in the ordered basis
        add(b, n_ + a, k, mixed_[k](a, b));
        add(a, n_ + b, n_ + k, -mixed_[k](a, b));
      }
    }
  }
  std::vector<LieAlgebra::Bracket> brackets;
  for (auto& [ij, v] : br) brackets.push_back({ij.first, ij.second, v});
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n_; ++i) labels.push_back("X" + std::to_string(i + 1));
  for (std::size_t i = 0; i < n_; ++i) labels.push_back("cX" + std::to_string(i + 1));
  return LieAlgebra(N, brackets, name_, labels);
}

// ---------------------------------------------------------------- verdicts

std::string to_string(FreeVerdict v) {
  switch (v) {
    case FreeVerdict::free: return "free";
    case FreeVerdict::not_free: return "not_free";
    case FreeVerdict::abelian: return "abelian";
  }
  return "?";
}

std::string to_string(ComplexStructureKind k) {
  switch (k) {
    case ComplexStructureKind::parallelisable: return "parallelisable";
    case ComplexStructureKind::abelian: return "abelian";
    case ComplexStructureKind::generic: return "generic";
  }
  return "?";
}

FreeVerdict free_verdict_from_string(std::string_view s) {
  if (s == "free") return FreeVerdict::free;
  if (s == "not_free") return FreeVerdict::not_free;
  if (s == "abelian") return FreeVerdict::abelian;
  throw std::invalid_argument("unknown free verdict '" + std::string(s) + "'");
}

// ----------------------------------------------------------------- parsers

namespace {

std::string strip(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

std::vector<std::string> lines_of(std::string_view text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (auto h = line.find('#'); h != std::string_view::npos) line = line.substr(0, h);
    std::string s(line);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    std::size_t lead = 0;
    while (lead < s.size() && std::isspace(static_cast<unsigned char>(s[lead]))) ++lead;
    s = s.substr(lead);
    if (!s.empty()) out.push_back(s);
    start = end + 1;
  }
  return out;
}

// Splits "a+b-c" into signed pieces {+a, +b, -c}; a leading sign is allowed.
std::vector<std::pair<int, std::string>> signed_terms(const std::string& s, const std::string& context) {
  std::vector<std::pair<int, std::string>> out;
  std::size_t i = 0;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (!out.empty()) {
      throw ParseError("expected '+' or '-' in '" + context + "'");
    }
    std::size_t j = i;
    while (j < s.size() && s[j] != '+' && s[j] != '-') ++j;
    if (j == i) throw ParseError("empty term in '" + context + "'");
    out.emplace_back(sign, s.substr(i, j - i));
    i = j;
  }
  if (out.empty()) throw ParseError("empty expression in '" + context + "'");
  return out;
}

Rational parse_coefficient(const std::string& s, const std::string& context) {
  try {
    return parse_rational(s);
  } catch (const std::invalid_argument&) {
    throw ParseError("malformed coefficient '" + s + "' in '" + context + "'");
  }
}

std::size_t parse_index(const std::string& s, const std::string& context) {
  if (s.empty() || s.size() > 6 || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(c); }))
    throw ParseError("malformed index '" + s + "' in '" + context + "'");
  const std::size_t v = std::stoul(s);
  if (v == 0) throw ParseError("indices start at 1 in '" + context + "'");
  return v;
}

}  // namespace

LieAlgebra parse_salamon(std::string_view text) {
  const std::string s = strip(text);
  if (s.size() < 3 || s.front() != '(' || s.back() != ')')
    throw ParseError("Salamon notation must be a parenthesised list: '" + std::string(text) + "'");
  std::vector<std::string> entries;
  {
    std::string cur;
    for (std::size_t i = 1; i + 1 < s.size(); ++i) {
      if (s[i] == ',') {
        entries.push_back(cur);
        cur.clear();
      } else {
        cur += s[i];
      }
    }
    entries.push_back(cur);
  }
  const std::size_t n = entries.size();
  if (n > 9) throw ParseError("Salamon notation supports dimension at most 9; use the structure-constant format");
  std::map<std::pair<std::size_t, std::size_t>, Vector> br;
  for (std::size_t k = 0; k < n; ++k) {
    const std::string& e = entries[k];
    if (e.empty()) throw ParseError("empty entry " + std::to_string(k + 1) + " in '" + s + "'");
    if (e == "0") continue;
    for (auto& [sign, term] : signed_terms(e, e)) {
      Rational coef = sign;
      std::string pair = term;
      if (auto star = term.find('*'); star != std::string::npos) {
        coef *= parse_coefficient(term.substr(0, star), e);
        pair = term.substr(star + 1);
      }
      if (pair.size() != 2 || !std::isdigit(static_cast<unsigned char>(pair[0])) ||
          !std::isdigit(static_cast<unsigned char>(pair[1])))
        throw ParseError("malformed token '" + term + "' in entry " + std::to_string(k + 1));
      std::size_t a = std::size_t(pair[0] - '0');
      std::size_t b = std::size_t(pair[1] - '0');
      if (a == b) throw ParseError("repeated digit in token '" + term + "'");
      if (a == 0 || b == 0 || a > n || b > n)
        throw ParseError("index out of range in token '" + term + "' (dimension " + std::to_string(n) + ")");
      if (a > b) {
        std::swap(a, b);
        coef = -coef;
      }
      auto& v = br[{a - 1, b - 1}];
      if (v.empty()) v.resize(n);
      // d w^k (X_a, X_b) = -w^k([X_a, X_b])
      v[k] -= coef;
    }
  }
  std::vector<LieAlgebra::Bracket> brackets;
  for (auto& [ij, v] : br) brackets.push_back({ij.first, ij.second, v});
  return LieAlgebra(n, brackets, s);
}

LieAlgebra parse_structure_constants(std::string_view text) {
  std::size_t dim = 0;
  struct Raw {
    std::size_t i, j;
    std::vector<std::pair<Rational, std::size_t>> terms;
  };
  std::vector<Raw> raws;
  std::size_t max_index = 0;
  for (const auto& line : lines_of(text)) {
    if (line.rfind("dim", 0) == 0) {
      dim = parse_index(strip(line.substr(3)), line);
      continue;
    }
    if (line.rfind("bracket", 0) != 0) throw ParseError("expected 'dim' or 'bracket' line: '" + line + "'");
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("missing '=' in '" + line + "'");
    std::vector<std::string> lhs;
    {
      std::string cur;
      for (char c : line.substr(7, eq - 7)) {
        if (std::isspace(static_cast<unsigned char>(c))) {
          if (!cur.empty()) lhs.push_back(cur), cur.clear();
        } else {
          cur += c;
        }
      }
      if (!cur.empty()) lhs.push_back(cur);
    }
    if (lhs.size() != 2) throw ParseError("expected 'bracket i j' in '" + line + "'");
    Raw r{parse_index(lhs[0], line) - 1, parse_index(lhs[1], line) - 1, {}};
    const std::string rhs = strip(line.substr(eq + 1));
    if (rhs != "0") {
      for (auto& [sign, term] : signed_terms(rhs, line)) {
        Rational coef = sign;
        std::string idx = term;
        if (auto star = term.find('*'); star != std::string::npos) {
          coef *= parse_coefficient(term.substr(0, star), line);
          idx = term.substr(star + 1);
        }
        const std::size_t k = parse_index(idx, line);
        r.terms.emplace_back(coef, k - 1);
        max_index = std::max(max_index, k);
      }
    }
    max_index = std::max({max_index, r.i + 1, r.j + 1});
    raws.push_back(std::move(r));
  }
  if (dim == 0) dim = max_index;
  if (dim == 0) throw ParseError("structure-constant file defines no dimension");
  if (max_index > dim) throw ParseError("index out of range for declared dimension " + std::to_string(dim));
  std::vector<LieAlgebra::Bracket> brackets;
  for (auto& r : raws) {
    if (r.i == r.j) throw ParseError("bracket of a basis vector with itself");
    Vector v(dim);
    for (auto& [c, k] : r.terms) v[k] += c;
    brackets.push_back({r.i, r.j, std::move(v)});
  }
  return LieAlgebra(dim, brackets);
}

ComplexStructureAlgebra parse_complex_structure(std::string_view text) {
  struct Entry {
    std::size_t k;
    bool a_conj;
    std::size_t a;
    bool b_conj;
    std::size_t b;
    Rational coef;
  };
  std::vector<Entry> entries;
  std::size_t dim = 0, max_index = 0;
  auto covector = [&](const std::string& tok, const std::string& line) {
    bool conj = false;
    std::string t = tok;
    if (t.rfind("cw", 0) == 0) {
      conj = true;
      t = t.substr(2);
    } else if (t.rfind("w", 0) == 0) {
      t = t.substr(1);
    } else {
      throw ParseError("malformed covector '" + tok + "' in '" + line + "'");
    }
    const std::size_t idx = parse_index(t, line);
    max_index = std::max(max_index, idx);
    return std::pair{conj, idx - 1};
  };
  for (const auto& line : lines_of(text)) {
    if (line.rfind("dim", 0) == 0) {
      dim = parse_index(strip(line.substr(3)), line);
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("missing '=' in '" + line + "'");
    const std::string lhs = strip(line.substr(0, eq));
    if (lhs.rfind("dw", 0) != 0) throw ParseError("expected 'dw<k> = ...' in '" + line + "'");
    const std::size_t k = parse_index(lhs.substr(2), line);
    max_index = std::max(max_index, k);
    const std::string rhs = strip(line.substr(eq + 1));
    if (rhs == "0") continue;
    for (auto& [sign, term] : signed_terms(rhs, line)) {
      Rational coef = sign;
      std::string wedge = term;
      if (auto star = term.find('*'); star != std::string::npos) {
        coef *= parse_coefficient(term.substr(0, star), line);
        wedge = term.substr(star + 1);
      }
      const auto caret = wedge.find('^');
      if (caret == std::string::npos) throw ParseError("expected a wedge 'x^y' in '" + term + "'");
      auto [ca, a] = covector(wedge.substr(0, caret), line);
      auto [cb, b] = covector(wedge.substr(caret + 1), line);
      entries.push_back({k - 1, ca, a, cb, b, coef});
    }
  }
  if (dim == 0) dim = max_index;
  if (dim == 0) throw ParseError("complex-structure file defines no dimension");
  if (max_index > dim) throw ParseError("index out of range for declared dimension " + std::to_string(dim));
  std::vector<Matrix> holo(dim, Matrix(dim, dim)), mixed(dim, Matrix(dim, dim));
  for (const auto& e : entries) {
    if (e.a_conj && e.b_conj)
      throw ParseError("(0,2)-component in dw" + std::to_string(e.k + 1) + ": structure is not integrable");
    if (!e.a_conj && !e.b_conj) {
      if (e.a == e.b) throw ParseError("w^a ^ w^a term in dw" + std::to_string(e.k + 1));
      if (e.a < e.b) holo[e.k](e.a, e.b) += e.coef;
      else holo[e.k](e.b, e.a) -= e.coef;
    } else if (e.a_conj) {
      mixed[e.k](e.a, e.b) += e.coef;
    } else {
      // w^a ^ cw^b = -(cw^b ^ w^a)
      mixed[e.k](e.b, e.a) -= e.coef;
    }
  }
  return ComplexStructureAlgebra(dim, std::move(holo), std::move(mixed));
}

// -------------------------------------------------------------- invariants

void validate(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vector x(n), y(n), z(n);
        x[i] = y[j] = z[k] = 1;
        Vector s = L.bracket(L.bracket(x, y), z);
        const Vector t = L.bracket(L.bracket(y, z), x);
        const Vector u = L.bracket(L.bracket(z, x), y);
        for (std::size_t r = 0; r < n; ++r) s[r] += t[r] + u[r];
        if (std::any_of(s.begin(), s.end(), [](const Rational& q) { return sgn(q) != 0; }))
          throw JacobiViolation(i, j, k);
      }
  (void)descending_central_series(L);
}

void validate(const ComplexStructureAlgebra& H) { validate(H.complexification()); }

std::vector<Subspace> descending_central_series(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  std::vector<Subspace> series{Subspace::whole(n)};
  while (!series.back().is_zero()) {
    const Subspace& cur = series.back();
    std::vector<Vector> gens;
    for (std::size_t r = 0; r < cur.dim(); ++r) {
      const Vector x = cur.basis_vector(r);
      for (std::size_t j = 0; j < n; ++j) {
        Vector y(n);
        y[j] = 1;
        gens.push_back(L.bracket(x, y));
      }
    }
    Subspace next(n, gens);
    if (next == cur)
      throw NotNilpotent("descending central series stabilises at dimension " + std::to_string(cur.dim()));
    series.push_back(std::move(next));
  }
  return series;
}

std::size_t nilpotency_index(const LieAlgebra& L) { return descending_central_series(L).size() - 1; }

Subspace center(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  Matrix m(n * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) m(j * n + k, i) = L.constant(i, j, k);
  return Subspace::from_rows(nullspace(m));
}

Subspace derived_annihilator(const LieAlgebra& L) {
  const auto series = descending_central_series(L);
  return series.size() > 1 ? series[1].annihilator() : Subspace::whole(L.dim());
}

FreeVerdict free_two_step_quotient_test(const LieAlgebra& L) {
  const auto series = descending_central_series(L);
  const std::size_t n = L.dim();
  if (series.size() < 2 || series[1].is_zero()) return FreeVerdict::abelian;
  const Subspace& c1 = series[1];
  const Subspace c2 = series.size() > 2 ? series[2] : Subspace(n);
  // standard basis vectors off the pivots of C_1 span a complement of C_1
  std::vector<bool> pivot(n, false);
  for (auto p : c1.pivots()) pivot[p] = true;
  std::vector<std::size_t> complement;
  for (std::size_t i = 0; i < n; ++i)
    if (!pivot[i]) complement.push_back(i);
  const std::size_t m = complement.size();
  const std::size_t need = m * (m - 1) / 2;
  if (c1.dim() - c2.dim() != need) return FreeVerdict::not_free;
  std::vector<Vector> images;
  for (std::size_t r = 0; r < c2.dim(); ++r) images.push_back(c2.basis_vector(r));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) images.push_back(L.bracket_basis(complement[a], complement[b]));
  const std::size_t induced_rank = Subspace(n, images).dim() - c2.dim();
  return induced_rank == need ? FreeVerdict::free : FreeVerdict::not_free;
}

ComplexStructureKind classify_complex_structure(const ComplexStructureAlgebra& H) {
  bool mixed_zero = true, holo_zero = true;
  for (std::size_t k = 0; k < H.dim_complex(); ++k)
    for (std::size_t a = 0; a < H.dim_complex(); ++a)
      for (std::size_t b = 0; b < H.dim_complex(); ++b) {
        if (sgn(H.mixed(k, a, b)) != 0) mixed_zero = false;
        if (sgn(H.holo(k, a, b)) != 0) holo_zero = false;
      }
  if (mixed_zero) return ComplexStructureKind::parallelisable;
  if (holo_zero) return ComplexStructureKind::abelian;
  return ComplexStructureKind::generic;
}

ComplexStructureAlgebra to_complex_structure(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  std::vector<Matrix> holo(n, Matrix(n, n)), mixed(n, Matrix(n, n));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b) holo[k](a, b) = L.differential_coeff(k, a, b);
  return ComplexStructureAlgebra(n, std::move(holo), std::move(mixed), L.name());
}

}  // namespace nilkur
