#include "stratsym/models.hpp"

#include "stratsym/errors.hpp"

namespace stratsym {

namespace {

ModelCatalogEntry make_r2n(int n) {
  ModelCatalogEntry entry;
  entry.name = "r2n:" + std::to_string(n);
  entry.doc = "Standard symplectic R^" + std::to_string(2 * n) +
              " with omega = sum dx_i ^ dy_i and {x_i, y_j} = delta_ij.";
  entry.symplectic = SymplecticModel::standard(n);
  entry.stratified = StratifiedModel::make(
      {{"euclidean", 2 * n, true}}, {}, false,
      {PresentationKind::Embedded, "identity embedding of R^" + std::to_string(2 * n), {}, {}},
      darboux_names(n), {{"euclidean", entry.symplectic->chart()}});
  return entry;
}

ModelCatalogEntry make_torus4() {
  ModelCatalogEntry entry;
  entry.name = "torus4";
  entry.doc =
      "4-torus as the abelian Chevalley-Eilenberg chart: d = 0, "
      "omega = e1^e2 + e3^e4. Satisfies hard Lefschetz in every degree.";
  ChartPtr chart = make_ce_chart({"e1", "e2", "e3", "e4"}, {});
  MatQ omega(4, 4);
  omega.at(0, 1) = 1;
  omega.at(1, 0) = -1;
  omega.at(2, 3) = 1;
  omega.at(3, 2) = -1;
  entry.symplectic = SymplecticModel(chart, omega);
  entry.stratified = StratifiedModel::make(
      {{"torus", 4, true}}, {}, true,
      {PresentationKind::Quotient, "R^4 by the integer lattice translations", {}, {}}, {},
      {{"torus", chart}});
  return entry;
}

ModelCatalogEntry make_kodaira_thurston() {
  ModelCatalogEntry entry;
  entry.name = "kodaira_thurston";
  entry.doc =
      "Kodaira-Thurston nilmanifold chart: d e4 = -e1^e2, omega = e1^e4 + e2^e3. "
      "The standard counterexample to hard Lefschetz; Betti numbers (1,3,4,3,1).";
  ChartPtr chart = make_ce_chart({"e1", "e2", "e3", "e4"},
                                 {{4, 1, 2, Scalar(1)}});
  MatQ omega(4, 4);
  omega.at(0, 3) = 1;
  omega.at(3, 0) = -1;
  omega.at(1, 2) = 1;
  omega.at(2, 1) = -1;
  entry.symplectic = SymplecticModel(chart, omega);
  entry.stratified = StratifiedModel::make(
      {{"nilmanifold", 4, true}}, {}, true,
      {PresentationKind::Quotient, "Heisenberg x R by a cocompact lattice", {}, {}}, {},
      {{"nilmanifold", chart}});
  return entry;
}

ModelCatalogEntry make_cz2_cone() {
  ModelCatalogEntry entry;
  entry.name = "cz2_cone";
  entry.doc =
      "Quotient of the symplectic plane by the Z2 reflection (x,y) -> (-x,-y), "
      "presented by the invariants u = x^2, v = y^2, w = xy with w^2 = uv. "
      "Strata: apex {u=v=w=0} and the punctured cone.";

  std::vector<std::string> gens = {"u", "v", "w"};
  AlgebraPresentation pres(gens, {Poly::parse("w^2 - u*v", gens)}, {2, 2, 2},
                           {"w", "u", "v"});
  std::map<std::pair<int, int>, Poly> table;
  table[{0, 1}] = Poly::parse("4*w", gens);   // {u, v}
  table[{0, 2}] = Poly::parse("2*u", gens);   // {u, w}
  table[{1, 2}] = Poly::parse("-2*v", gens);  // {v, w}
  entry.poisson = PoissonPresentation(std::move(pres), std::move(table));

  entry.stratified = StratifiedModel::make(
      {{"apex", 0, false}, {"cone_reg", 2, true}},
      {{"apex", "cone_reg", "apex is the image of the origin, limit of every ray"}}, false,
      {PresentationKind::Quotient, "Z2 acting on R^2 by negation; invariant generators", gens,
       {}},
      gens, {{"cone_reg", make_coordinate_chart(darboux_names(1))}});

  entry.classifier = {
      {"apex",
       {Poly::parse("u", gens), Poly::parse("v", gens), Poly::parse("w", gens)},
       {}},
      {"cone_reg",
       {},
       {Poly::parse("u", gens), Poly::parse("v", gens), Poly::parse("w", gens)}},
  };
  return entry;
}

ModelCatalogEntry make_sl2_cone() {
  ModelCatalogEntry entry;
  entry.name = "sl2_cone";
  entry.doc =
      "Nilpotent cone in sl2 with the Lie-Poisson bracket {h,e} = 2e, "
      "{h,f} = -2f, {e,f} = h, cut out by the Casimir h^2 + 4ef = 0. "
      "Strata: origin and the punctured cone of nilpotent elements.";

  std::vector<std::string> gens = {"e", "f", "h"};
  AlgebraPresentation pres(gens, {Poly::parse("h^2 + 4*e*f", gens)}, {2, 2, 2},
                           {"h", "e", "f"});
  std::map<std::pair<int, int>, Poly> table;
  table[{0, 1}] = Poly::parse("h", gens);     // {e, f}
  table[{0, 2}] = Poly::parse("-2*e", gens);  // {e, h}
  table[{1, 2}] = Poly::parse("2*f", gens);   // {f, h}
  entry.poisson = PoissonPresentation(std::move(pres), std::move(table));

  entry.stratified = StratifiedModel::make(
      {{"origin", 0, false}, {"orbit", 2, true}},
      {{"origin", "orbit", "zero matrix is the limit of scaled nilpotents"}}, false,
      {PresentationKind::Embedded,
       "closure of the regular nilpotent orbit inside sl2 = R^3; also carries a "
       "resolvable presentation through the cotangent bundle of the flag variety, "
       "recorded here descriptively only",
       gens, {}},
      gens, {{"orbit", make_coordinate_chart(darboux_names(1))}});

  entry.classifier = {
      {"origin",
       {Poly::parse("e", gens), Poly::parse("f", gens), Poly::parse("h", gens)},
       {}},
      {"orbit",
       {},
       {Poly::parse("e", gens), Poly::parse("f", gens), Poly::parse("h", gens)}},
  };
  return entry;
}

}  // namespace

ModelCatalogEntry load_builtin(const std::string& name) {
  if (name.rfind("r2n:", 0) == 0) {
    int n = 0;
    try {
      n = std::stoi(name.substr(4));
    } catch (...) {
      throw DomainError(ErrorKind::UnknownModel, "bad r2n parameter in '" + name + "'");
    }
    if (n < 1 || n > 16)
      throw DomainError(ErrorKind::UnknownModel, "r2n parameter out of range in '" + name + "'");
    return make_r2n(n);
  }
  if (name == "torus4") return make_torus4();
  if (name == "kodaira_thurston") return make_kodaira_thurston();
  if (name == "cz2_cone") return make_cz2_cone();
  if (name == "sl2_cone") return make_sl2_cone();
  throw DomainError(ErrorKind::UnknownModel, "no builtin model named '" + name + "'");
}

std::vector<std::string> builtin_names() {
  return {"r2n:1", "r2n:2", "r2n:3", "torus4", "kodaira_thurston", "cz2_cone", "sl2_cone"};
}

HamiltonianSystem make_system(const ModelCatalogEntry& entry, const Poly& hamiltonian) {
  if (!entry.poisson)
    throw DomainError(ErrorKind::InvalidModel,
                      "model '" + entry.name + "' carries no Poisson presentation");
  return HamiltonianSystem(*entry.poisson, hamiltonian, entry.classifier);
}

}  // namespace stratsym
