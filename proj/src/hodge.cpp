#include "nilkur/hodge.hpp"

#include <map>
#include <utility>

namespace nilkur {

PolyVector apply_matrix(const Matrix& m, const PolyVector& v) {
  if (v.size() != m.cols()) throw std::invalid_argument("apply: shape mismatch");
  PolyVector out(m.rows());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (v[c].is_zero()) continue;
    for (std::size_t r = 0; r < m.rows(); ++r)
      if (sgn(m(r, c)) != 0) out[r].add_scaled(v[c], m(r, c));
  }
  return out;
}

bool is_zero(const PolyVector& v) {
  for (const auto& p : v)
    if (!p.is_zero()) return false;
  return true;
}

std::vector<Mask> barred_basis(unsigned n, unsigned q) {
  std::vector<Mask> out;
  if (q > n) return out;
  std::vector<unsigned> idx(q);
  for (unsigned i = 0; i < q; ++i) idx[i] = i;
  while (true) {
    Mask m = 0;
    for (unsigned i : idx) m |= Mask(1) << (n + i);
    out.push_back(m);
    // next q-subset in lexicographic order
    int pos = int(q) - 1;
    while (pos >= 0 && idx[pos] == n - q + unsigned(pos)) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (unsigned i = unsigned(pos) + 1; i < q; ++i) idx[i] = idx[i - 1] + 1;
  }
  return out;
}

// ------------------------------------------------------------ HodgeComplex

HodgeComplex::HodgeComplex(std::vector<std::size_t> dims, std::vector<Matrix> differentials, unsigned decompose_up_to)
    : dims_(std::move(dims)), d_(std::move(differentials)) {
  if (dims_.empty() || d_.size() + 1 != dims_.size())
    throw std::invalid_argument("HodgeComplex: need one differential between consecutive degrees");
  for (std::size_t k = 0; k < d_.size(); ++k)
    if (d_[k].rows() != dims_[k + 1] || d_[k].cols() != dims_[k])
      throw std::invalid_argument("HodgeComplex: differential has the wrong shape");
  std::vector<std::size_t> ranks(d_.size());
  for (std::size_t k = 0; k < d_.size(); ++k) ranks[k] = rank(d_[k]);
  for (std::size_t k = 0; k <= top(); ++k) {
    const std::size_t out_rank = k < d_.size() ? ranks[k] : 0;
    const std::size_t in_rank = k > 0 ? ranks[k - 1] : 0;
    betti_.push_back(dims_[k] - out_rank - in_rank);
  }
  for (std::size_t k = 0; k <= std::min<std::size_t>(decompose_up_to, top()); ++k) {
    const Matrix prev = differential_in(k);
    const Matrix next = differential(k);
    Degree deg;
    deg.exact = Subspace::from_rows(prev.transpose());
    deg.coexact = Subspace::from_rows(next);
    deg.harmonic = Subspace::from_rows(nullspace(laplacian(k)));
    deg.proj_exact = deg.exact.projector();
    deg.proj_harmonic = deg.harmonic.projector();
    deg.proj_coexact = deg.coexact.projector();
    deg.delta = pseudo_inverse(prev);
    degrees_.push_back(std::move(deg));
  }
}

Matrix HodgeComplex::differential(std::size_t k) const {
  if (k < d_.size()) return d_[k];
  return Matrix(0, dims_.at(k));
}

Matrix HodgeComplex::differential_in(std::size_t k) const {
  if (k == 0) return Matrix(dims_.at(0), 0);
  return d_.at(k - 1);
}

const HodgeComplex::Degree& HodgeComplex::degree(std::size_t k) const {
  if (k >= degrees_.size()) throw std::out_of_range("HodgeComplex: degree not decomposed");
  return degrees_[k];
}

Matrix HodgeComplex::laplacian(std::size_t k) const {
  const Matrix prev = differential_in(k);
  const Matrix next = differential(k);
  return prev * prev.transpose() + next.transpose() * next;
}

// ------------------------------------------------------ HodgeDecomposition

namespace {

std::map<Mask, std::size_t> index_of(const std::vector<Mask>& basis) {
  std::map<Mask, std::size_t> idx;
  for (std::size_t i = 0; i < basis.size(); ++i) idx[basis[i]] = i;
  return idx;
}

}  // namespace

HodgeDecomposition::HodgeDecomposition(const ExteriorAlgebra& E, unsigned max_degree) : n_(E.n()) {
  // degrees above n are zero spaces, kept so that small algebras have degree 2
  const unsigned top = std::max(n_, max_degree + 1);
  for (unsigned q = 0; q <= top; ++q) bases_.push_back(barred_basis(n_, q));
  std::vector<std::size_t> dims;
  for (const auto& b : bases_) dims.push_back(b.size());
  std::vector<Matrix> ds;
  for (unsigned q = 0; q < top; ++q) {
    const auto target = index_of(bases_[q + 1]);
    Matrix d(bases_[q + 1].size(), bases_[q].size());
    for (std::size_t s = 0; s < bases_[q].size(); ++s) {
      const Mask m = bases_[q][s];
      for (const auto& [dm, c] : E.d_basis(m)) {
        auto it = target.find(dm);
        if (it != target.end()) d(it->second, s) += c;  // keep the (0, q+1) part only
      }
    }
    ds.push_back(std::move(d));
  }
  complex_ = HodgeComplex(std::move(dims), std::move(ds), max_degree);
}

Vector HodgeDecomposition::coordinates(const Form& f, unsigned q) const {
  const auto idx = index_of(bases_.at(q));
  Vector out(bases_[q].size());
  for (const auto& [m, c] : f.terms()) {
    auto it = idx.find(m);
    if (it == idx.end()) throw std::invalid_argument("coordinates: form is not of type (0," + std::to_string(q) + ")");
    if (!c.is_constant()) throw std::invalid_argument("coordinates: non-constant coefficient");
    out[it->second] = c.is_zero() ? Rational(0) : c.terms()[0].coeff;
  }
  return out;
}

PolyVector HodgeDecomposition::poly_coordinates(const Form& f, unsigned q) const {
  const auto idx = index_of(bases_.at(q));
  PolyVector out(bases_[q].size());
  for (const auto& [m, c] : f.terms()) {
    auto it = idx.find(m);
    if (it == idx.end()) throw std::invalid_argument("coordinates: form is not of type (0," + std::to_string(q) + ")");
    out[it->second] = c;
  }
  return out;
}

Form HodgeDecomposition::form(const PolyVector& coords, unsigned q) const {
  if (coords.size() != bases_.at(q).size()) throw std::invalid_argument("form: wrong number of coordinates");
  Form f(n_);
  for (std::size_t i = 0; i < coords.size(); ++i) f.add_term(bases_[q][i], coords[i]);
  return f;
}

Form HodgeDecomposition::form(const Vector& coords, unsigned q) const {
  PolyVector p(coords.begin(), coords.end());
  return form(p, q);
}

namespace {

std::vector<Form> forms_of(const HodgeDecomposition& h, const Subspace& s, unsigned q) {
  std::vector<Form> out;
  for (std::size_t r = 0; r < s.dim(); ++r) out.push_back(h.form(s.basis_vector(r), q));
  return out;
}

}  // namespace

std::vector<Form> HodgeDecomposition::exact_basis(unsigned q) const {
  return forms_of(*this, complex_.degree(q).exact, q);
}
std::vector<Form> HodgeDecomposition::harmonic_basis(unsigned q) const {
  return forms_of(*this, complex_.degree(q).harmonic, q);
}
std::vector<Form> HodgeDecomposition::coexact_basis(unsigned q) const {
  return forms_of(*this, complex_.degree(q).coexact, q);
}

// -------------------------------------------------------------- ThetaHodge

ThetaHodge::ThetaHodge(const ExteriorAlgebra& E, unsigned max_degree)
    : n_(E.n()), componentwise_(E.parallelisable()), scalar_(E, max_degree) {
  if (componentwise_) return;
  const unsigned n = n_;
  // delbar X_j = sum_b cw^b (x) [cX_b, X_j]^{1,0}
  std::vector<std::vector<std::pair<unsigned, std::vector<std::pair<unsigned, Rational>>>>> dX(n);
  for (unsigned j = 0; j < n; ++j) {
    for (unsigned b = 0; b < n; ++b) {
      const Vector br = E.bracket(n + b, j);
      std::vector<std::pair<unsigned, Rational>> comps;
      for (unsigned k = 0; k < n; ++k)
        if (sgn(br[k]) != 0) comps.emplace_back(k, br[k]);
      if (!comps.empty()) dX[j].emplace_back(b, std::move(comps));
    }
  }
  std::vector<std::size_t> dims;
  for (unsigned q = 0; q <= n; ++q) dims.push_back(dim(q));
  std::vector<Matrix> ds;
  for (unsigned q = 0; q < n; ++q) {
    const auto& src = scalar_.basis(q);
    const auto target = index_of(scalar_.basis(q + 1));
    const Matrix& dscalar = scalar_.complex().differential(q);
    Matrix d(dim(q + 1), dim(q));
    const Rational sign = q % 2 ? -1 : 1;
    for (std::size_t s = 0; s < src.size(); ++s) {
      for (unsigned j = 0; j < n; ++j) {
        const std::size_t col = s * n + j;
        for (std::size_t r = 0; r < dscalar.rows(); ++r)
          if (sgn(dscalar(r, s)) != 0) d(r * n + j, col) += dscalar(r, s);
        for (const auto& [b, comps] : dX[j]) {
          const Mask bit = Mask(1) << (n + b);
          if (src[s] & bit) continue;
          const Rational w = sign * wedge_sign(src[s], bit);
          const std::size_t row_s = target.at(src[s] | bit);
          for (const auto& [k, c] : comps) d(row_s * n + k, col) += w * c;
        }
      }
    }
    ds.push_back(std::move(d));
  }
  full_ = HodgeComplex(std::move(dims), std::move(ds), max_degree);
}

std::vector<std::size_t> ThetaHodge::cohomology_dims() const {
  std::vector<std::size_t> out;
  for (unsigned q = 0; q <= n_; ++q)
    out.push_back(componentwise_ ? scalar_.hodge_number(q) * n_ : full_.cohomology_dim(q));
  return out;
}

PolyVector ThetaHodge::coordinates(const VectorForm& v, unsigned q) const {
  PolyVector out(dim(q));
  for (const auto& [j, f] : v.components()) {
    if (j >= n_) throw std::invalid_argument("ThetaHodge: barred vector component");
    const PolyVector c = scalar_.poly_coordinates(f, q);
    for (std::size_t s = 0; s < c.size(); ++s) out[s * n_ + j] = c[s];
  }
  return out;
}

VectorForm ThetaHodge::vector_form(const PolyVector& coords, unsigned q) const {
  if (coords.size() != dim(q)) throw std::invalid_argument("ThetaHodge: wrong number of coordinates");
  VectorForm v(n_);
  const auto& basis = scalar_.basis(q);
  for (unsigned j = 0; j < n_; ++j) {
    Form f(n_);
    for (std::size_t s = 0; s < basis.size(); ++s) f.add_term(basis[s], coords[s * n_ + j]);
    v.add(j, f);
  }
  return v;
}

PolyVector ThetaHodge::apply_blockwise(const Matrix& m, const PolyVector& v) const {
  if (v.size() != m.cols() * n_) throw std::invalid_argument("ThetaHodge: shape mismatch");
  PolyVector out(m.rows() * n_);
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (unsigned j = 0; j < n_; ++j) {
      const Polynomial& p = v[c * n_ + j];
      if (p.is_zero()) continue;
      for (std::size_t r = 0; r < m.rows(); ++r)
        if (sgn(m(r, c)) != 0) out[r * n_ + j].add_scaled(p, m(r, c));
    }
  return out;
}

PolyVector ThetaHodge::delbar(const PolyVector& v, unsigned q) const {
  if (componentwise_) return apply_blockwise(scalar_.complex().differential(q), v);
  return apply_matrix(full_.differential(q), v);
}

PolyVector ThetaHodge::project(const PolyVector& v, unsigned q, Piece piece) const {
  const auto& deg = componentwise_ ? scalar_.complex().degree(q) : full_.degree(q);
  const Matrix& m = piece == Piece::exact      ? deg.proj_exact
                    : piece == Piece::harmonic ? deg.proj_harmonic
                                               : deg.proj_coexact;
  return componentwise_ ? apply_blockwise(m, v) : apply_matrix(m, v);
}

PolyVector ThetaHodge::project_exact(const PolyVector& v, unsigned q) const { return project(v, q, Piece::exact); }
PolyVector ThetaHodge::project_harmonic(const PolyVector& v, unsigned q) const {
  return project(v, q, Piece::harmonic);
}
PolyVector ThetaHodge::project_coexact(const PolyVector& v, unsigned q) const {
  return project(v, q, Piece::coexact);
}

PolyVector ThetaHodge::delta(const PolyVector& v, unsigned q) const {
  const auto& deg = componentwise_ ? scalar_.complex().degree(q) : full_.degree(q);
  return componentwise_ ? apply_blockwise(deg.delta, v) : apply_matrix(deg.delta, v);
}

PolyVector ThetaHodge::delta_checked(const PolyVector& v, unsigned q) const {
  if (project_exact(v, q) != v) throw PreimageError("delta: argument is not delbar-exact");
  return delta(v, q);
}

Subspace ThetaHodge::harmonic(unsigned q) const {
  if (!componentwise_) return full_.degree(q).harmonic;
  const Subspace& h = scalar_.complex().degree(q).harmonic;
  std::vector<Vector> rows;
  for (std::size_t r = 0; r < h.dim(); ++r)
    for (unsigned j = 0; j < n_; ++j) {
      Vector row(dim(q));
      const Vector b = h.basis_vector(r);
      for (std::size_t s = 0; s < b.size(); ++s) row[s * n_ + j] = b[s];
      rows.push_back(std::move(row));
    }
  return Subspace(dim(q), rows);
}

Subspace ThetaHodge::exact(unsigned q) const {
  if (!componentwise_) return full_.degree(q).exact;
  const Subspace& e = scalar_.complex().degree(q).exact;
  std::vector<Vector> rows;
  for (std::size_t r = 0; r < e.dim(); ++r)
    for (unsigned j = 0; j < n_; ++j) {
      Vector row(dim(q));
      const Vector b = e.basis_vector(r);
      for (std::size_t s = 0; s < b.size(); ++s) row[s * n_ + j] = b[s];
      rows.push_back(std::move(row));
    }
  return Subspace(dim(q), rows);
}

PolyVector ThetaHodge::harmonic_coordinates(const PolyVector& v, unsigned q) const {
  const Subspace h = harmonic(q);
  PolyVector out;
  for (auto p : h.pivots()) out.push_back(v.at(p));
  return out;
}

}  // namespace nilkur
