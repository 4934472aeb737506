#pragma once

#include <string>
#include <vector>

#include "stratsym/symplectic.hpp"

namespace stratsym {

/// Membership test for one stratum in generator space: every polynomial
/// in `equal_zero` vanishes within the tolerance, and when `any_nonzero`
/// is nonempty at least one of its polynomials exceeds it.
struct StratumPredicate {
  std::string id;
  std::vector<Poly> equal_zero;
  std::vector<Poly> any_nonzero;
};

/// Polynomial Hamiltonian system over a Poisson presentation, with a
/// stratum classifier. Construction verifies that {H, relation} reduces
/// to zero for every relation, so the flow stays on the variety.
class HamiltonianSystem {
 public:
  HamiltonianSystem(PoissonPresentation poisson, Poly hamiltonian,
                    std::vector<StratumPredicate> classifier = {},
                    double classifier_tolerance = 1e-10);

  const PoissonPresentation& poisson() const { return poisson_; }
  const Poly& hamiltonian() const { return hamiltonian_; }
  const std::vector<StratumPredicate>& classifier() const { return classifier_; }
  const std::vector<std::string>& generators() const;

  /// Components {H, g_i} of the Hamiltonian vector field, reduced.
  const std::vector<Poly>& vector_field() const { return field_; }

  std::string classify(const std::vector<double>& state) const;
  double hamiltonian_value(const std::vector<double>& state) const;
  std::vector<double> relation_residuals(const std::vector<double>& state) const;

 private:
  PoissonPresentation poisson_;
  Poly hamiltonian_;
  std::vector<StratumPredicate> classifier_;
  double tolerance_;
  std::vector<Poly> field_;
};

struct Trajectory {
  std::vector<double> times;
  std::vector<std::vector<double>> states;
  std::vector<double> hamiltonian_values;
  std::vector<std::vector<double>> relation_residuals;
  std::vector<std::string> stratum_ids;
};

/// Classical fixed-step 4th-order integration of the polynomial vector
/// field, recording H, relation residuals and the stratum id per step.
/// The initial state must satisfy the relations within 1e-12; overflow
/// raises DomainError(NonFiniteState).
Trajectory integrate(const HamiltonianSystem& system, std::vector<double> initial,
                     double t_end, double dt);

struct ConservationReport {
  double hamiltonian_drift = 0;
  std::vector<double> relation_drift;
  int stratum_changes = 0;
};

ConservationReport conservation_report(const Trajectory& trajectory,
                                       const HamiltonianSystem& system);

/// CSV with columns t, generator values, H, relation residuals, stratum.
std::string trajectory_csv(const Trajectory& trajectory, const HamiltonianSystem& system);

}  // namespace stratsym
