#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stratsym/models.hpp"

namespace stratsym {

/// Parses a model file. The first significant line selects the schema:
///   kind symplectic   chart + omega matrix entries
///   kind poisson      generators, relations, bracket triples
///   kind stratified   strata list, order pairs, presentation block
/// '#' starts a comment. Throws DomainError(ParseError/InvalidModel).
ModelCatalogEntry load_model_text(const std::string& text, const std::string& name);
ModelCatalogEntry load_model_file(const std::string& path);

/// Builtin name if it resolves, otherwise treats `source` as a path.
ModelCatalogEntry load_model(const std::string& source);

std::string symplectic_model_text(const SymplecticModel& model);
std::string poisson_text(const PoissonPresentation& pres);
std::string stratified_text(const StratifiedModel& model);

/// Text export of a catalog entry in the model file schema.
std::string export_model_text(const ModelCatalogEntry& entry);

// ---------------------------------------------------------------------------
// Reports

struct HomologyReport {
  std::string model;
  std::optional<int> total_degree;
  std::vector<int> betti_d;
  std::vector<int> betti_delta;
  std::map<int, std::pair<int, int>> duality_ranks;
  bool duality_holds = false;
  /// Cocycle representatives per degree, in the polynomial/wedge grammar.
  std::map<int, std::vector<std::string>> witnesses;
};

struct LefschetzReport {
  std::string model;
  std::map<int, bool> hard_lefschetz;
  bool hard_lefschetz_all = false;
  std::map<int, std::vector<bool>> harmonic_found;  // degree -> per class
  bool harmonic_all = false;
  /// Theorem-level cross-check: the two predicates agree.
  bool equivalence_consistent = false;
  std::map<int, bool> cavalcanti;
};

std::string to_json(const HomologyReport& report);
std::string to_csv(const HomologyReport& report);
std::string to_json(const LefschetzReport& report);
std::string to_csv(const LefschetzReport& report);

}  // namespace stratsym
