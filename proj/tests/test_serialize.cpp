#include <doctest.h>

#include "stratsym/errors.hpp"
#include "stratsym/homology.hpp"
#include "stratsym/models.hpp"
#include "stratsym/serialize.hpp"

using namespace stratsym;

TEST_CASE("symplectic model files round trip") {
  for (const char* name : {"torus4", "kodaira_thurston", "r2n:2"}) {
    ModelCatalogEntry entry = load_builtin(name);
    std::string text = symplectic_model_text(*entry.symplectic);
    ModelCatalogEntry reloaded = load_model_text(text, name);
    REQUIRE(reloaded.symplectic.has_value());
    CHECK(*reloaded.symplectic->chart() == *entry.symplectic->chart());
    CHECK(reloaded.symplectic->omega_matrix() == entry.symplectic->omega_matrix());
    CHECK(reloaded.symplectic->omega_form() == entry.symplectic->omega_form());
  }
}

TEST_CASE("poisson files round trip") {
  for (const char* name : {"cz2_cone", "sl2_cone"}) {
    ModelCatalogEntry entry = load_builtin(name);
    std::string text = poisson_text(*entry.poisson);
    ModelCatalogEntry reloaded = load_model_text(text, name);
    REQUIRE(reloaded.poisson.has_value());
    const auto& a = entry.poisson->presentation();
    const auto& b = reloaded.poisson->presentation();
    CHECK(a.generators() == b.generators());
    REQUIRE(a.relations().size() == b.relations().size());
    for (std::size_t i = 0; i < a.relations().size(); ++i)
      CHECK(a.relations()[i] == b.relations()[i]);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        CHECK(entry.poisson->generator_bracket(i, j) ==
              reloaded.poisson->generator_bracket(i, j));
    // Normal forms agree, so the order priority survived the round trip.
    Poly probe = Poly::parse(name[0] == 'c' ? "w^3" : "h^3", a.generators());
    CHECK(a.reduce(probe) == b.reduce(probe));
  }
}

TEST_CASE("stratified files round trip") {
  ModelCatalogEntry entry = load_builtin("cz2_cone");
  std::string text = stratified_text(*entry.stratified);
  ModelCatalogEntry reloaded = load_model_text(text, "cz2");
  REQUIRE(reloaded.stratified.has_value());
  CHECK(reloaded.stratified->depth() == entry.stratified->depth());
  CHECK(reloaded.stratified->strata().size() == entry.stratified->strata().size());
  CHECK(reloaded.stratified->sample_coordinates() ==
        entry.stratified->sample_coordinates());
  CHECK(poset_isomorphic(*reloaded.stratified, *entry.stratified));
}

TEST_CASE("malformed model files are rejected") {
  CHECK_THROWS_AS(load_model_text("", "bad"), DomainError);
  CHECK_THROWS_AS(load_model_text("kind nonsense\n", "bad"), DomainError);
  CHECK_THROWS_AS(load_model_text("kind symplectic\nchart ce\ndim 2\nnames a\n", "bad"),
                  DomainError);
  CHECK_THROWS_AS(
      load_model_text("kind poisson\ngenerators a b\nbracket a b !!\n", "bad"),
      DomainError);
  // Degenerate omega.
  CHECK_THROWS_AS(
      load_model_text("kind symplectic\nchart coordinate\ndim 2\nnames x y\n", "bad"),
      DomainError);
}

TEST_CASE("comments and builtin fallback") {
  std::string text =
      "# quotient cone\nkind poisson\ngenerators u v w\nweights 2 2 2\norder w u v\n"
      "relation w^2 - u*v\nbracket u v 4*w\nbracket u w 2*u\nbracket v w -2*v\n";
  ModelCatalogEntry entry = load_model_text(text, "inline");
  REQUIRE(entry.poisson.has_value());
  CHECK(load_model("torus4").name == "torus4");
  CHECK_THROWS_AS(load_model("/no/such/file.model"), DomainError);
}

TEST_CASE("homology report serialization") {
  HomologyReport report;
  report.model = "torus4";
  report.betti_d = {1, 4, 6, 4, 1};
  report.betti_delta = {1, 4, 6, 4, 1};
  report.duality_ranks[0] = {1, 1};
  report.duality_holds = true;
  report.witnesses[0] = {"(1)"};

  std::string json_text = to_json(report);
  CHECK(json_text.find("\"schema_version\": 1") != std::string::npos);
  CHECK(json_text.find("\"betti_d\"") != std::string::npos);
  CHECK(to_json(report) == json_text);  // deterministic

  std::string csv = to_csv(report);
  CHECK(csv.rfind("degree,rank_d,rank_delta,duality_match\n", 0) == 0);
}

TEST_CASE("lefschetz report serialization") {
  LefschetzReport report;
  report.model = "kodaira_thurston";
  report.hard_lefschetz = {{0, true}, {1, false}, {2, true}};
  report.hard_lefschetz_all = false;
  report.harmonic_found[1] = {true, false, true};
  report.harmonic_all = false;
  report.equivalence_consistent = true;
  report.cavalcanti = {{0, true}};

  std::string json_text = to_json(report);
  CHECK(json_text.find("\"equivalence_consistent\": true") != std::string::npos);
  std::string csv = to_csv(report);
  CHECK(csv.find("1,false") != std::string::npos);
}

TEST_CASE("model export text") {
  ModelCatalogEntry entry = load_builtin("cz2_cone");
  std::string text = export_model_text(entry);
  CHECK(text.find("kind poisson") != std::string::npos);
  CHECK(text.find("kind stratified") != std::string::npos);
}
