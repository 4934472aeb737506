#include "stratsym/hamflow.hpp"

#include <cmath>
#include <sstream>

#include "stratsym/errors.hpp"

namespace stratsym {

HamiltonianSystem::HamiltonianSystem(PoissonPresentation poisson, Poly hamiltonian,
                                     std::vector<StratumPredicate> classifier,
                                     double classifier_tolerance)
    : poisson_(std::move(poisson)),
      hamiltonian_(std::move(hamiltonian)),
      classifier_(std::move(classifier)),
      tolerance_(classifier_tolerance) {
  const auto& pres = poisson_.presentation();
  hamiltonian_ = hamiltonian_.aligned_to(pres.generators());

  for (const auto& rel : pres.relations()) {
    Poly br = poisson_bracket(hamiltonian_, rel, poisson_);
    if (!pres.reduce(br).is_zero())
      throw DomainError(ErrorKind::InvalidModel,
                        "Hamiltonian does not preserve relation " + rel.str());
  }
  for (const auto& g : pres.generators())
    field_.push_back(poisson_bracket(hamiltonian_, Poly::variable(g), poisson_));
}

const std::vector<std::string>& HamiltonianSystem::generators() const {
  return poisson_.presentation().generators();
}

namespace {

std::map<std::string, double> bind(const std::vector<std::string>& names,
                                   const std::vector<double>& values) {
  std::map<std::string, double> point;
  for (std::size_t i = 0; i < names.size(); ++i) point[names[i]] = values[i];
  return point;
}

}  // namespace

std::string HamiltonianSystem::classify(const std::vector<double>& state) const {
  auto point = bind(generators(), state);
  for (const auto& pred : classifier_) {
    bool match = true;
    for (const auto& p : pred.equal_zero)
      if (std::abs(p.eval(point)) > tolerance_) match = false;
    if (match && !pred.any_nonzero.empty()) {
      bool some = false;
      for (const auto& p : pred.any_nonzero)
        if (std::abs(p.eval(point)) > tolerance_) some = true;
      match = some;
    }
    if (match) return pred.id;
  }
  return "";
}

double HamiltonianSystem::hamiltonian_value(const std::vector<double>& state) const {
  return hamiltonian_.eval(bind(generators(), state));
}

std::vector<double> HamiltonianSystem::relation_residuals(
    const std::vector<double>& state) const {
  auto point = bind(generators(), state);
  std::vector<double> out;
  for (const auto& rel : poisson_.presentation().relations()) out.push_back(rel.eval(point));
  return out;
}

Trajectory integrate(const HamiltonianSystem& system, std::vector<double> initial,
                     double t_end, double dt) {
  if (dt <= 0) throw DomainError(ErrorKind::InvalidModel, "step size must be positive");
  const auto& gens = system.generators();
  if (initial.size() != gens.size())
    throw DomainError(ErrorKind::DimensionMismatch, "initial state size != generator count");
  for (double r : system.relation_residuals(initial))
    if (std::abs(r) > 1e-12)
      throw DomainError(ErrorKind::InvalidModel,
                        "initial state violates a relation beyond 1e-12");

  auto eval_field = [&](const std::vector<double>& state) {
    auto point = bind(gens, state);
    std::vector<double> v(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) v[i] = system.vector_field()[i].eval(point);
    return v;
  };

  Trajectory traj;
  auto record = [&](double t, const std::vector<double>& state) {
    for (double x : state)
      if (!std::isfinite(x))
        throw DomainError(ErrorKind::NonFiniteState, "state overflowed during integration");
    traj.times.push_back(t);
    traj.states.push_back(state);
    traj.hamiltonian_values.push_back(system.hamiltonian_value(state));
    traj.relation_residuals.push_back(system.relation_residuals(state));
    traj.stratum_ids.push_back(system.classify(state));
  };

  std::vector<double> state = std::move(initial);
  record(0.0, state);
  long steps = std::lround(t_end / dt);
  for (long s = 1; s <= steps; ++s) {
    std::vector<double> k1 = eval_field(state);
    std::vector<double> tmp(state.size());

    for (std::size_t i = 0; i < state.size(); ++i) tmp[i] = state[i] + 0.5 * dt * k1[i];
    std::vector<double> k2 = eval_field(tmp);
    for (std::size_t i = 0; i < state.size(); ++i) tmp[i] = state[i] + 0.5 * dt * k2[i];
    std::vector<double> k3 = eval_field(tmp);
    for (std::size_t i = 0; i < state.size(); ++i) tmp[i] = state[i] + dt * k3[i];
    std::vector<double> k4 = eval_field(tmp);

    for (std::size_t i = 0; i < state.size(); ++i)
      state[i] += dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    record(s * dt, state);
  }
  return traj;
}

ConservationReport conservation_report(const Trajectory& trajectory,
                                       const HamiltonianSystem& system) {
  ConservationReport report;
  if (trajectory.states.empty()) return report;

  // Recompute from the stored states rather than trusting cached values.
  double h0 = system.hamiltonian_value(trajectory.states.front());
  std::size_t nrel = system.poisson().presentation().relations().size();
  report.relation_drift.assign(nrel, 0.0);

  std::string previous = system.classify(trajectory.states.front());
  for (const auto& state : trajectory.states) {
    double h = system.hamiltonian_value(state);
    report.hamiltonian_drift = std::max(report.hamiltonian_drift, std::abs(h - h0));
    std::vector<double> res = system.relation_residuals(state);
    for (std::size_t i = 0; i < nrel; ++i)
      report.relation_drift[i] = std::max(report.relation_drift[i], std::abs(res[i]));
    std::string id = system.classify(state);
    if (id != previous) ++report.stratum_changes;
    previous = id;
  }
  return report;
}

std::string trajectory_csv(const Trajectory& trajectory, const HamiltonianSystem& system) {
  std::ostringstream os;
  os.precision(17);
  os << "t";
  for (const auto& g : system.generators()) os << "," << g;
  os << ",H";
  for (std::size_t i = 0; i < system.poisson().presentation().relations().size(); ++i)
    os << ",relation" << i;
  os << ",stratum\n";
  for (std::size_t row = 0; row < trajectory.times.size(); ++row) {
    os << trajectory.times[row];
    for (double x : trajectory.states[row]) os << "," << x;
    os << "," << trajectory.hamiltonian_values[row];
    for (double r : trajectory.relation_residuals[row]) os << "," << r;
    os << "," << trajectory.stratum_ids[row] << "\n";
  }
  return os.str();
}

}  // namespace stratsym
