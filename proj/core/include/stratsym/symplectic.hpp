#pragma once

#include <map>
#include <utility>

#include "stratsym/form.hpp"
#include "stratsym/linalg.hpp"
#include "stratsym/poly.hpp"

namespace stratsym {

/// Constant symplectic structure over a chart: the form matrix omega,
/// its inverse bivector G, the 2-form omega_form and the Liouville
/// volume omega^n / n!.
///
/// Normalization: on a Darboux chart with omega = sum dx_i ^ dy_i the
/// bracket satisfies {x_i, y_j} = delta_ij, i.e. G = -omega^{-1} at the
/// raw matrix level (the sign absorbs the index-lowering convention, so
/// that G and omega compose to the identity as bundle maps).
class SymplecticModel {
 public:
  /// Validates: omega antisymmetric and nondegenerate, omega_form closed
  /// (automatic on coordinate charts, checked on CE charts).
  SymplecticModel(ChartPtr chart, MatQ omega);

  /// Standard structure sum dx_i ^ dy_i on R^{2n}.
  static SymplecticModel standard(int n);

  const ChartPtr& chart() const { return chart_; }
  int dimension() const { return chart_->dimension(); }
  int half_dimension() const { return chart_->dimension() / 2; }
  const MatQ& omega_matrix() const { return omega_; }
  const MatQ& bivector() const { return bivector_; }
  const Form& omega_form() const { return omega_form_; }
  const Form& volume() const { return volume_; }

  /// G-pairing of basis 1-forms, 0-based indices.
  const Scalar& pairing(int i, int j) const { return bivector_.at(i, j); }

 private:
  ChartPtr chart_;
  MatQ omega_;
  MatQ bivector_;
  Form omega_form_;
  Form volume_;
};

/// Poisson algebra presented by generators, relations and a bracket
/// table on generator pairs, extended by the Leibniz rule. Construction
/// verifies antisymmetry, the Jacobi identity on all generator triples
/// (after reduction) and that each relation brackets to zero with each
/// generator, so the bracket descends to the quotient.
class PoissonPresentation {
 public:
  PoissonPresentation() = default;
  /// `table` maps generator index pairs (i < j) to {g_i, g_j}.
  PoissonPresentation(AlgebraPresentation presentation,
                      std::map<std::pair<int, int>, Poly> table);

  const AlgebraPresentation& presentation() const { return presentation_; }

  /// {g_i, g_j} for any index pair, with antisymmetry filled in.
  Poly generator_bracket(int i, int j) const;

 private:
  AlgebraPresentation presentation_;
  std::map<std::pair<int, int>, Poly> table_;

  void validate() const;
};

/// {f, g} = sum_ij G^{ij} (df/dx_i)(dg/dx_j) on a coordinate chart.
Poly poisson_bracket(const Poly& f, const Poly& g, const SymplecticModel& model);

/// Leibniz extension of the generator table, reduced to normal form.
Poly poisson_bracket(const Poly& f, const Poly& g, const PoissonPresentation& pres);

/// Koszul-Brylinski boundary via the explicit two-sum bracket formula
/// applied to the canonical decomposable expansion (coordinate monomials
/// as the functions). Coordinate charts only; degree drops by one.
Form delta_formula(const Form& a, const SymplecticModel& model);

/// The same boundary as the graded commutator i(G) d - d i(G). Works on
/// both chart kinds; agrees with delta_formula wherever both apply.
Form delta_commutator(const Form& a, const SymplecticModel& model);

/// Symplectic star: the unique (2n-k)-form with
///   beta ^ star(a) = G^k(beta, a) vol   for all k-forms beta,
/// where G^k is the Gram-determinant extension of the 1-form pairing.
/// Requires homogeneous input (DomainError(NonHomogeneous) otherwise);
/// star(star(a)) = a.
Form star(const Form& a, const SymplecticModel& model);

/// Lefschetz operator: wedge with omega.
Form L(const Form& a, const SymplecticModel& model);

/// Dual Lefschetz operator: contraction with the bivector G.
Form Lstar(const Form& a, const SymplecticModel& model);

/// A = [L*, L]; acts on homogeneous degree-k forms as (n - k) Id.
Form A(const Form& a, const SymplecticModel& model);

}  // namespace stratsym
