#include "nilkur/kuranishi.hpp"

#include <algorithm>

namespace nilkur {

namespace {

// The complex Lie algebra V of a parallelisable structure.
LieAlgebra holomorphic_part(const ComplexStructureAlgebra& H) {
  const std::size_t n = H.dim_complex();
  std::vector<LieAlgebra::Bracket> brackets;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) brackets.push_back({a, b, H.bracket_holo(a, b)});
  return LieAlgebra(n, brackets, H.name());
}

}  // namespace

KuranishiProblem::KuranishiProblem(const LieAlgebra& L)
    : H_(to_complex_structure(L)), L_(L), parallelisable_(true), E_(H_), theta_(E_, 2) {
  validate(L);
  init();
}

KuranishiProblem::KuranishiProblem(const ComplexStructureAlgebra& H)
    : H_(H),
      parallelisable_(classify_complex_structure(H) == ComplexStructureKind::parallelisable),
      E_(H_),
      theta_(E_, 2) {
  validate(H);
  if (parallelisable_) L_ = holomorphic_part(H);
  init();
}

void KuranishiProblem::init() {
  nu_ = parallelisable_ ? nilkur::nilpotency_index(*L_) : nilkur::nilpotency_index(H_.complexification());
  const unsigned n = E_.n();
  h1_ = theta_.harmonic(1);
  for (auto p : h1_.pivots()) vars_.push_back(Var::t(unsigned(p / n) + 1, unsigned(p % n) + 1));

  const std::size_t d1 = theta_.dim(1);
  std::vector<VectorForm> basis;
  for (std::size_t p = 0; p < d1; ++p) {
    PolyVector e(d1);
    e[p] = 1;
    basis.push_back(theta_.vector_form(e, 1));
  }
  table_.resize(d1 * d1);
  for (std::size_t p = 0; p < d1; ++p)
    for (std::size_t q = 0; q < d1; ++q) {
      const VectorForm br = bracket(basis[p], basis[q]);
      if (br.is_zero()) continue;
      const PolyVector c = theta_.coordinates(br, 2);
      for (std::size_t i = 0; i < c.size(); ++i)
        if (!c[i].is_zero()) table_[p * d1 + q].emplace_back(i, c[i].terms()[0].coeff);
    }
}

PolyVector KuranishiProblem::generic_phi1() const {
  PolyVector phi(theta_.dim(1));
  for (std::size_t r = 0; r < h1_.dim(); ++r) {
    const Polynomial t = Polynomial::variable(vars_[r]);
    const Vector row = h1_.basis_vector(r);
    for (std::size_t i = 0; i < row.size(); ++i)
      if (sgn(row[i]) != 0) phi[i].add_scaled(t, row[i]);
  }
  return phi;
}

std::map<Var, Rational> KuranishiProblem::variable_values(const Vector& point) const {
  if (!h1_.contains(point)) throw std::invalid_argument("variable_values: point is not harmonic");
  std::map<Var, Rational> values;
  const Vector c = h1_.coordinates(point);
  for (std::size_t r = 0; r < vars_.size(); ++r) values[vars_[r]] = c[r];
  return values;
}

VectorForm KuranishiProblem::bracket(const VectorForm& a, const VectorForm& b) const {
  return parallelisable_ ? schouten_parallelisable(E_, a, b) : schouten_general(E_, a, b);
}

PolyVector KuranishiProblem::bracket(const PolyVector& a, const PolyVector& b) const {
  const std::size_t d1 = theta_.dim(1);
  if (a.size() != d1 || b.size() != d1) throw std::invalid_argument("bracket: wrong number of coordinates");
  PolyVector out(theta_.dim(2));
  for (std::size_t p = 0; p < d1; ++p) {
    if (a[p].is_zero()) continue;
    for (std::size_t q = 0; q < d1; ++q) {
      const auto& entry = table_[p * d1 + q];
      if (entry.empty() || b[q].is_zero()) continue;
      const Polynomial prod = a[p] * b[q];
      for (const auto& [i, c] : entry) out[i].add_scaled(prod, c);
    }
  }
  return out;
}

PhiSeries KuranishiProblem::phi_recursion(std::optional<unsigned> max_degree, std::optional<PolyVector> phi1) const {
  unsigned K;
  if (parallelisable_) {
    K = unsigned(nu_);
    if (max_degree) K = std::min(K, *max_degree);
  } else {
    if (!max_degree) throw MissingDegreeCap("recursion on a non-parallelisable structure needs a degree cap");
    K = *max_degree;
  }
  K = std::max(K, 1u);
  PhiSeries s;
  s.max_degree = K;
  const PolyVector zero2(theta_.dim(2));
  s.phi.assign(K + 1, PolyVector(theta_.dim(1)));
  s.sums.assign(K + 1, zero2);
  s.harmonic.assign(K + 1, zero2);
  s.coexact.assign(K + 1, zero2);
  s.phi[1] = phi1 ? *phi1 : generic_phi1();
  if (s.phi[1].size() != theta_.dim(1)) throw std::invalid_argument("phi_recursion: wrong number of coordinates");

  bool obstructed_below = false;
  for (unsigned k = 2; k <= K; ++k) {
    PolyVector sum(theta_.dim(2));
    for (unsigned i = 1; i < k; ++i) {
      const PolyVector br = bracket(s.phi[i], s.phi[k - i]);
      for (std::size_t c = 0; c < sum.size(); ++c) sum[c] += br[c];
    }
    PolyVector harm = theta_.project_harmonic(sum, 2);
    PolyVector exact = theta_.project_exact(sum, 2);
    PolyVector rest = sum;
    for (std::size_t c = 0; c < rest.size(); ++c) rest[c] -= harm[c] + exact[c];
    // S_k is delbar-closed modulo the lower obstructions; with none, it must be closed.
    if (!is_zero(rest) && !obstructed_below)
      throw ClosednessViolation("bracket sum in degree " + std::to_string(k) + " is not delbar-closed");
    PolyVector next = theta_.delta(exact, 2);
    for (auto& p : next) p = -p;
    s.phi[k] = std::move(next);
    if (!is_zero(harm)) obstructed_below = true;
    s.sums[k] = std::move(sum);
    s.harmonic[k] = std::move(harm);
    s.coexact[k] = std::move(rest);
  }
  return s;
}

std::vector<std::string> KuranishiProblem::harmonic_labels(unsigned q) const {
  const Subspace h = theta_.harmonic(q);
  std::vector<std::string> out;
  for (std::size_t r = 0; r < h.dim(); ++r) {
    const Vector row = h.basis_vector(r);
    out.push_back(theta_.vector_form(PolyVector(row.begin(), row.end()), q).to_string());
  }
  return out;
}

ObstructionResult KuranishiProblem::make_result(const PolyVector& harmonic_sum, unsigned q) const {
  ObstructionResult r;
  r.harmonic_coefficients = theta_.harmonic_coordinates(harmonic_sum, q);
  r.labels = harmonic_labels(q);
  std::vector<Polynomial> nonzero;
  for (const auto& p : r.harmonic_coefficients)
    if (!p.is_zero()) nonzero.push_back(p);
  r.generators = IdealGens(nonzero);
  for (const auto& g : r.generators.generators()) r.degree_profile.push_back(g.degree());
  return r;
}

ObstructionResult KuranishiProblem::obstruction(const PhiSeries& series) const {
  PolyVector total(theta_.dim(2));
  for (const auto& h : series.harmonic)
    for (std::size_t c = 0; c < total.size(); ++c) total[c] += h[c];
  return make_result(total, 2);
}

ObstructionResult KuranishiProblem::obstruction_map(std::optional<unsigned> max_degree) const {
  return obstruction(phi_recursion(max_degree));
}

ObstructionResult KuranishiProblem::quadratic_obstruction_closed_form() const {
  if (!parallelisable_) throw std::invalid_argument("closed quadratic formula needs a parallelisable structure");
  const unsigned n = E_.n();
  const auto eta = theta_.scalar().harmonic_basis(1);
  const Subspace& h = theta_.scalar().complex().degree(1).harmonic;
  VectorForm total(n);
  for (std::size_t r = 0; r < eta.size(); ++r)
    for (std::size_t s = r + 1; s < eta.size(); ++s) {
      const Form w = wedge(eta[r], eta[s]);
      if (w.is_zero()) continue;
      const unsigned i = unsigned(h.pivots()[r]) + 1, j = unsigned(h.pivots()[s]) + 1;
      for (unsigned k = 0; k < n; ++k)
        for (unsigned l = k + 1; l < n; ++l) {
          const Vector br = E_.bracket(k, l);
          const Polynomial det = minor2(i, j, k + 1, l + 1) * Rational(2);
          for (unsigned x = 0; x < n; ++x)
            if (sgn(br[x]) != 0) total.add(x, w * (det * br[x]));
        }
    }
  return make_result(theta_.project_harmonic(theta_.coordinates(total, 2), 2), 2);
}

PolyVector KuranishiProblem::truncated_bracket_sum(const PhiSeries& series) const {
  const unsigned K = series.max_degree;
  PolyVector out(theta_.dim(2));
  if (parallelisable_) {
    PolyVector phi(theta_.dim(1));
    for (unsigned k = 1; k <= K; ++k)
      for (std::size_t c = 0; c < phi.size(); ++c) phi[c] += series.phi[k][c];
    return bracket(phi, phi);
  }
  for (unsigned i = 1; i <= K; ++i)
    for (unsigned j = 1; i + j <= K; ++j) {
      const PolyVector br = bracket(series.phi[i], series.phi[j]);
      for (std::size_t c = 0; c < out.size(); ++c) out[c] += br[c];
    }
  return out;
}

PolyVector KuranishiProblem::maurer_cartan_defect(const PhiSeries& series) const {
  PolyVector phi(theta_.dim(1));
  for (unsigned k = 1; k <= series.max_degree; ++k)
    for (std::size_t c = 0; c < phi.size(); ++c) phi[c] += series.phi[k][c];
  PolyVector out = theta_.delbar(phi, 1);
  const PolyVector br = truncated_bracket_sum(series);
  for (std::size_t c = 0; c < out.size(); ++c) out[c] += br[c];
  return out;
}

PolyVector KuranishiProblem::mc_residual(const PhiSeries& series) const {
  PolyVector out = maurer_cartan_defect(series);
  const PolyVector h = theta_.project_harmonic(truncated_bracket_sum(series), 2);
  for (std::size_t c = 0; c < out.size(); ++c) out[c] -= h[c];
  return out;
}

SmoothnessCertificate KuranishiProblem::smoothness(const ObstructionResult& obs) const {
  SmoothnessCertificate c;
  c.abelian = parallelisable_ ? L_->is_abelian() : H_.complexification().is_abelian();
  c.obs_identically_zero = obs.identically_zero();
  if (parallelisable_) c.free_verdict = free_two_step_quotient_test(*L_);
  if (!c.abelian) {
    const auto eta = theta_.scalar().harmonic_basis(1);
    const Subspace& exact2 = theta_.scalar().complex().degree(2).exact;
    for (std::size_t r = 0; r < eta.size() && !c.lambda2_singular; ++r)
      for (std::size_t s = r + 1; s < eta.size() && !c.lambda2_singular; ++s) {
        const Form w = wedge(eta[r], eta[s]);
        if (!exact2.contains(theta_.scalar().coordinates(w, 2))) c.lambda2_singular = true;
      }
  }
  return c;
}

ParallelisableDirections KuranishiProblem::parallelisable_directions() const {
  if (!parallelisable_) throw std::invalid_argument("parallelisable_directions: structure is not parallelisable");
  const unsigned n = E_.n();
  const Subspace z = center(*L_);
  const Subspace& h = theta_.scalar().complex().degree(1).harmonic;
  std::vector<Vector> rows;
  for (std::size_t r = 0; r < h.dim(); ++r)
    for (std::size_t k = 0; k < z.dim(); ++k) {
      Vector row(theta_.dim(1));
      const Vector eta = h.basis_vector(r);
      const Vector zv = z.basis_vector(k);
      for (unsigned s = 0; s < n; ++s)
        for (unsigned j = 0; j < n; ++j) row[s * n + j] = eta[s] * zv[j];
      rows.push_back(std::move(row));
    }
  return {Subspace(theta_.dim(1), rows), h.dim() * (n - z.dim())};
}

// ------------------------------------------------------------------ analyze

namespace {

void fill_common(KuranishiReport& r, const KuranishiProblem& P) {
  const auto& scalar = P.theta().scalar();
  r.dim = P.exterior().n();
  r.nu = P.nilpotency_index();
  for (unsigned q = 0; q <= r.dim; ++q) r.hodge_numbers.push_back(scalar.hodge_number(q));
  r.theta_dims = P.theta().cohomology_dims();
}

void finish(KuranishiReport& r, const KuranishiProblem& P, const PhiSeries& series, const ObstructionResult& obs) {
  r.recursion_degree = series.max_degree;
  r.generators = obs.generators.generators();
  for (int d : obs.degree_profile) r.max_generator_degree = std::max(r.max_generator_degree, d);
  r.smooth = obs.identically_zero();
  if (r.smooth) r.kuranishi_dim = (long long)P.theta().cohomology_dims().at(1);
  r.mc_residual_zero = is_zero(P.mc_residual(series));
  for (unsigned k = 2; k <= series.max_degree; ++k)
    if (!is_zero(series.coexact[k]))
      r.closedness_notes.push_back("S_" + std::to_string(k) +
                                   " is delbar-closed only modulo the lower-order obstructions");
  const auto cert = P.smoothness(obs);
  r.lambda2_singular = cert.lambda2_singular;
  if (cert.free_verdict) r.free_verdict = to_string(*cert.free_verdict);
}

}  // namespace

KuranishiReport analyze(const LieAlgebra& L, const std::string& name) {
  KuranishiProblem P(L);
  KuranishiReport r;
  r.name = name.empty() ? L.name() : name;
  r.input = L.dim() <= 9 ? L.salamon() : L.name();
  r.structure = to_string(ComplexStructureKind::parallelisable);
  fill_common(r, P);
  const PhiSeries series = P.phi_recursion();
  const ObstructionResult obs = P.obstruction(series);
  finish(r, P, series, obs);
  r.quadratic_generators = P.quadratic_obstruction_closed_form().generators.generators();
  const auto dirs = P.parallelisable_directions();
  r.cylinder_dim = dirs.cylinder_dim;
  r.central_directions = dirs.subspace.dim();

  const long long h1 = (long long)r.theta_dims.at(1);
  const long long m = (long long)r.hodge_numbers.at(1);
  const long long n = (long long)r.dim;
  if (L.is_abelian() && n * n * (n + 1) / 2 != h1) {
    r.discrepancies.push_back({"paper-discrepancy", "h1_theta", h1, n * n * (n + 1) / 2,
                               "abelian a_k: computed k^2 = h^{0,1} * dim g, paper lists k^2(k+1)/2"});
  }
  if (r.free_verdict == "free" && r.nu == 2 && n == m * (m + 1) / 2) {
    if (m * (m + 3) / 2 != n)
      r.discrepancies.push_back({"paper-discrepancy", "dim", n, m * (m + 3) / 2,
                                 "free 2-step b_m: dim V + dim Lambda^2 V = m(m+1)/2, paper overview states m(m+3)/2"});
    if (m * m * (m + 3) / 2 != h1)
      r.discrepancies.push_back({"paper-discrepancy", "dim_kur", h1, m * m * (m + 3) / 2,
                                 "free 2-step b_m: computed m * m(m+1)/2 = h1(Theta), paper overview states m^2(m+3)/2"});
  }
  return r;
}

KuranishiReport analyze(const ComplexStructureAlgebra& H, unsigned max_degree, const std::string& name) {
  if (classify_complex_structure(H) == ComplexStructureKind::parallelisable) {
    // same algebra, same answer: use the complex Lie algebra directly
    KuranishiReport r = analyze(holomorphic_part(H), name.empty() ? H.name() : name);
    return r;
  }
  KuranishiProblem P(H);
  KuranishiReport r;
  r.name = name.empty() ? H.name() : name;
  r.input = H.name();
  r.structure = to_string(classify_complex_structure(H));
  fill_common(r, P);
  const PhiSeries series = P.phi_recursion(max_degree);
  finish(r, P, series, P.obstruction(series));
  return r;
}

}  // namespace nilkur
