#pragma once

// The Maurer-Cartan recursion Phi_k = -delta P sum_{i+j=k} [Phi_i, Phi_j], the
// obstruction map H[Phi, Phi], smoothness certificates and the report assembled
// from them.

#include "nilkur/algebra.hpp"
#include "nilkur/exterior.hpp"
#include "nilkur/hodge.hpp"
#include "nilkur/polynomial.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace nilkur {

class ClosednessViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class MissingDegreeCap : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Phi_1..Phi_K in coordinates of Lambda^{0,1} (x) V, with the bracket sums S_k
/// and their pieces. Index 0 of every vector is unused so that phi[k] is Phi_k.
struct PhiSeries {
  unsigned max_degree = 0;
  std::vector<PolyVector> phi;       // Lambda^{0,1} (x) V
  std::vector<PolyVector> sums;      // S_k = sum_{i+j=k} [Phi_i, Phi_j]
  std::vector<PolyVector> harmonic;  // H S_k
  std::vector<PolyVector> coexact;   // V-part of S_k; zero wherever closedness holds
};

struct ObstructionResult {
  std::vector<Polynomial> harmonic_coefficients;  // one per harmonic basis direction of H^2 (x) V
  std::vector<std::string> labels;                // e.g. "(cw1^cw3)*X4"
  IdealGens generators;
  std::vector<int> degree_profile;  // max t-degree of each generator
  bool identically_zero() const { return generators.empty(); }
};

struct SmoothnessCertificate {
  bool abelian = false;
  bool lambda2_singular = false;
  std::optional<FreeVerdict> free_verdict;  // parallelisable structures only
  bool obs_identically_zero = false;
};

struct ParallelisableDirections {
  Subspace subspace;        // H^1 (x) z(g) in coordinates of Lambda^{0,1} (x) V
  std::size_t cylinder_dim;  // d = h^{0,1} * dim(g / z)
};

/// Everything derived once from an algebra: Hodge data, the generic element
/// Phi_1 = sum t_i^j eta_i (x) X_j over the harmonic basis, and the bracket table.
class KuranishiProblem {
 public:
  explicit KuranishiProblem(const LieAlgebra& L);
  explicit KuranishiProblem(const ComplexStructureAlgebra& H);

  bool parallelisable() const { return parallelisable_; }
  const ComplexStructureAlgebra& structure() const { return H_; }
  const ExteriorAlgebra& exterior() const { return E_; }
  const ThetaHodge& theta() const { return theta_; }
  /// Nilpotency index of the complexified algebra (of g itself when parallelisable).
  std::size_t nilpotency_index() const { return nu_; }

  const std::vector<Var>& variables() const { return vars_; }
  const Subspace& harmonic1() const { return h1_; }
  PolyVector generic_phi1() const;
  /// Values of the variables for a point of H^1 (x) V given in coordinates.
  std::map<Var, Rational> variable_values(const Vector& point) const;

  /// Schouten bracket of two (0,1)-forms with values in V, in coordinates.
  PolyVector bracket(const PolyVector& a, const PolyVector& b) const;
  VectorForm bracket(const VectorForm& a, const VectorForm& b) const;

  /// Runs the recursion from phi1 (default: generic_phi1()). Parallelisable ambients stop at
  /// the nilpotency index unless capped lower; others require max_degree (MissingDegreeCap).
  PhiSeries phi_recursion(std::optional<unsigned> max_degree = std::nullopt,
                          std::optional<PolyVector> phi1 = std::nullopt) const;

  ObstructionResult obstruction(const PhiSeries& series) const;
  ObstructionResult obstruction_map(std::optional<unsigned> max_degree = std::nullopt) const;
  /// H[Phi_1, Phi_1] from the closed determinant formula, bypassing the recursion.
  ObstructionResult quadratic_obstruction_closed_form() const;

  /// delbar Phi + [Phi, Phi] - H[Phi, Phi] with brackets truncated at series degree
  /// (all pairs for parallelisable ambients, where the series is exact).
  PolyVector mc_residual(const PhiSeries& series) const;
  /// delbar Phi + [Phi, Phi], truncated the same way.
  PolyVector maurer_cartan_defect(const PhiSeries& series) const;

  SmoothnessCertificate smoothness(const ObstructionResult& obs) const;
  /// Requires a parallelisable ambient.
  ParallelisableDirections parallelisable_directions() const;

  /// Labels of the harmonic coordinates in degree q.
  std::vector<std::string> harmonic_labels(unsigned q) const;

 private:
  void init();
  PolyVector truncated_bracket_sum(const PhiSeries& series) const;
  ObstructionResult make_result(const PolyVector& harmonic_sum, unsigned q) const;

  ComplexStructureAlgebra H_;
  std::optional<LieAlgebra> L_;
  bool parallelisable_ = false;
  ExteriorAlgebra E_;
  ThetaHodge theta_;
  std::size_t nu_ = 0;
  Subspace h1_;
  std::vector<Var> vars_;
  // table_[p * dim1 + q]: sparse [e_p, e_q] for basis elements of Lambda^{0,1} (x) V
  std::vector<std::vector<std::pair<std::size_t, Rational>>> table_;
};

struct Discrepancy {
  std::string tag = "paper-discrepancy";
  std::string quantity;
  long long computed = 0;
  long long paper = 0;
  std::string note;
  bool operator==(const Discrepancy&) const = default;
};

struct KuranishiReport {
  std::string name;
  std::string input;
  std::string structure;  // parallelisable / abelian / generic
  std::size_t dim = 0;    // complex dimension
  std::size_t nu = 0;
  std::vector<std::size_t> hodge_numbers;  // h^{0,q}
  std::vector<std::size_t> theta_dims;     // h^q(Theta)
  std::string free_verdict;                // "" if not applicable
  bool lambda2_singular = false;
  unsigned recursion_degree = 0;
  std::vector<Polynomial> generators;
  std::vector<Polynomial> quadratic_generators;
  int max_generator_degree = -1;
  std::size_t cylinder_dim = 0;
  std::size_t central_directions = 0;
  bool smooth = false;
  long long kuranishi_dim = -1;  // h1(Theta) when smooth
  bool mc_residual_zero = false;
  std::vector<std::string> closedness_notes;
  std::vector<Discrepancy> discrepancies;

  bool operator==(const KuranishiReport&) const = default;
};

KuranishiReport analyze(const LieAlgebra& L, const std::string& name = {});
KuranishiReport analyze(const ComplexStructureAlgebra& H, unsigned max_degree, const std::string& name = {});

std::string to_json(const KuranishiReport& r, int indent = 2);
KuranishiReport report_from_json(const std::string& text);
std::string to_text(const KuranishiReport& r);

}  // namespace nilkur
