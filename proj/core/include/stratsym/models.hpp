#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stratsym/hamflow.hpp"
#include "stratsym/stratified.hpp"
#include "stratsym/symplectic.hpp"

namespace stratsym {

/// One shipped instance wiring the modules together. Names:
///   r2n:<n>          standard symplectic R^{2n}
///   torus4           abelian CE chart of the 4-torus
///   kodaira_thurston the nilpotent CE chart with d e4 = -e1^e2
///   cz2_cone         invariant cone of the Z2 quotient of R^2
///   sl2_cone         nilpotent cone in sl2 with the Lie-Poisson bracket
struct ModelCatalogEntry {
  std::string name;
  std::string doc;
  std::optional<SymplecticModel> symplectic;
  std::optional<PoissonPresentation> poisson;
  std::optional<StratifiedModel> stratified;
  std::vector<StratumPredicate> classifier;
};

/// Fully validated builtin; throws DomainError(UnknownModel) otherwise.
ModelCatalogEntry load_builtin(const std::string& name);

/// Catalog listing (instantiates the r2n family for n = 1..3).
std::vector<std::string> builtin_names();

/// Hamiltonian system over a cataloged Poisson presentation.
HamiltonianSystem make_system(const ModelCatalogEntry& entry, const Poly& hamiltonian);

}  // namespace stratsym
