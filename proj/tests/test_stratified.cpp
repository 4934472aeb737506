#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "stratsym/errors.hpp"
#include "stratsym/stratified.hpp"

using namespace stratsym;
using stratsym::testing::Rng;
using stratsym::testing::random_poly;

namespace {

StratifiedModel point_link() {
  return StratifiedModel::make({{"link", 1, true}}, {}, true);
}

StratifiedModel join_pattern(const std::string& l1, const std::string& l2) {
  // L1 x L2 x [0,1] with the ends collapsed: three strata, both factors
  // in the closure of the interior.
  return StratifiedModel::make(
      {{l1, 1, false}, {l2, 1, false}, {"interior", 3, true}},
      {{l1, "interior", "end collapse at 0"}, {l2, "interior", "end collapse at 1"}}, true);
}

}  // namespace

TEST_CASE("cone adds an apex below everything") {
  StratifiedModel link = point_link();
  CHECK(link.depth() == 0);
  StratifiedModel c = cone(link);
  CHECK(c.strata().size() == 2);
  CHECK(c.depth() == 1);
  CHECK(c.below("apex", "link"));

  StratifiedModel cc = cone(c);
  CHECK(cc.depth() == 2);
  CHECK(cc.strata().size() == 3);
}

TEST_CASE("cone requires a compact link") {
  StratifiedModel open_model = StratifiedModel::make({{"plane", 2, true}}, {}, false);
  CHECK_THROWS_AS(cone(open_model), DomainError);
}

TEST_CASE("product poset") {
  StratifiedModel pt = StratifiedModel::make({{"pt", 0, true}}, {}, true);
  StratifiedModel link = point_link();
  CHECK(poset_isomorphic(product(link, pt), link));

  StratifiedModel c1 = cone(point_link());
  StratifiedModel c2 = cone(point_link());
  StratifiedModel prod = product(c1, c2);
  CHECK(prod.depth() == 2);
  CHECK(prod.strata().size() == 4);
}

TEST_CASE("product of cones matches the cone of the join pattern") {
  StratifiedModel lhs = product(cone(point_link()), cone(point_link()));
  StratifiedModel rhs = cone(join_pattern("l1_slice", "l2_slice"));
  CHECK(rhs.strata().size() == 4);
  CHECK(rhs.depth() == 2);
  CHECK(poset_isomorphic(lhs, rhs));
}

TEST_CASE("depth is additive and cone increments it") {
  std::vector<StratifiedModel> models = {point_link(), cone(point_link()),
                                         cone(cone(point_link()))};
  for (const auto& a : models) {
    CHECK(cone(a).depth() == a.depth() + 1);
    for (const auto& b : models)
      CHECK(product(a, b).depth() == a.depth() + b.depth());
  }
}

TEST_CASE("frontier validation") {
  CHECK_THROWS_AS(StratifiedModel::make({{"a", 1, true}, {"b", 0, false}},
                                        {{"b", "a", ""}}, true),
                  DomainError);  // empty witness
  CHECK_THROWS_AS(StratifiedModel::make({{"a", 1, false}, {"b", 0, false}},
                                        {{"a", "b", "w"}, {"b", "a", "w"}}, true),
                  DomainError);  // cycle
  CHECK_THROWS_AS(StratifiedModel::make({{"a", 1, true}, {"b", 2, true}},
                                        {{"a", "b", "w"}}, true),
                  DomainError);  // regular stratum below another
}

TEST_CASE("fiber constancy membership examples") {
  // (n, k, l) = (3, 2, 1): one normal x1, one fiber y1, one base z1.
  FibrationSpec spec = FibrationSpec::make(3, 2, 1);

  auto r1 = fiber_constancy_membership(Poly::parse("x1*y1 + z1"), spec);
  CHECK(r1.member);
  CHECK(r1.base_part == Poly::parse("z1"));
  CHECK(r1.normal_parts[0] == Poly::parse("y1"));
  CHECK(r1.reassemble(spec) == Poly::parse("x1*y1 + z1"));

  auto r2 = fiber_constancy_membership(Poly::parse("y1"), spec);
  CHECK_FALSE(r2.member);

  auto r3 = fiber_constancy_membership(Poly::parse("x1*y1^3 + z1*z1"), spec);
  CHECK(r3.member);
  CHECK(r3.normal_parts[0] == Poly::parse("y1^3"));
  CHECK(r3.base_part == Poly::parse("z1^2"));

  CHECK_THROWS_AS(fiber_constancy_membership(Poly::parse("t"), spec), DomainError);
}

TEST_CASE("membership certificates reassemble exactly") {
  FibrationSpec spec = FibrationSpec::make(4, 3, 1);  // x1, y1 y2, z1
  Rng rng(71);
  auto vars = spec.variable_names();
  int members = 0;
  for (int i = 0; i < 50; ++i) {
    Poly g = random_poly(rng, vars, 4, 4);
    auto cert = fiber_constancy_membership(g, spec);
    if (cert.member) {
      ++members;
      CHECK(cert.reassemble(spec) == g);
    } else {
      // Restriction to x = 0 must genuinely involve a fiber variable.
      Poly restricted =
          g.substitute({{spec.normal_name(0), Poly::zero()}}).aligned_to(vars);
      bool touches = !restricted.partial(spec.fiber_name(0)).is_zero() ||
                     !restricted.partial(spec.fiber_name(1)).is_zero();
      CHECK(touches);
    }
  }
  CHECK(members > 0);
}

TEST_CASE("members form a subalgebra") {
  FibrationSpec spec = FibrationSpec::make(3, 2, 1);
  Rng rng(72);
  auto vars = spec.variable_names();
  int pairs = 0;
  while (pairs < 50) {
    Poly g1 = random_poly(rng, vars, 3, 3);
    Poly g2 = random_poly(rng, vars, 3, 3);
    if (!fiber_constancy_membership(g1, spec).member) continue;
    if (!fiber_constancy_membership(g2, spec).member) continue;
    ++pairs;
    CHECK(fiber_constancy_membership(g1 + g2, spec).member);
    CHECK(fiber_constancy_membership(g1 * g2, spec).member);
  }
}

TEST_CASE("cotangent growth witness") {
  FibrationSpec spec = FibrationSpec::make(3, 2, 1);
  auto small = cotangent_growth_witness(spec, 1);
  CHECK(small.independent);
  CHECK(small.rank == 1);

  auto grown = cotangent_growth_witness(spec, 8);
  CHECK(grown.independent);
  CHECK(grown.rank == 8);
  CHECK(grown.truncation_degree == 10);

  FibrationSpec no_fiber = FibrationSpec::make(3, 1, 1);
  CHECK_THROWS_AS(cotangent_growth_witness(no_fiber, 3), DomainError);
}

TEST_CASE("bump function contract") {
  BumpSpec spec;
  spec.epsilon = 1;
  spec.rho_B = SmoothExpr::generator("rb");
  spec.rho_cL = SmoothExpr::generator("rc");
  BumpResult bump = bump_function(spec);

  auto f_at = [&](double rb, double rc) { return bump.f.eval({{"rb", rb}, {"rc", rc}}); };

  // The plateau where f vanishes evaluates through x * fl(1/x), so the
  // double value may sit one ulp above the exact zero.
  CHECK(f_at(0, 0) == 1.0);            // center, exact
  CHECK(f_at(1, 1) < 1e-15);           // average = eps
  CHECK(f_at(0.5, 0.5) < 1e-15);       // average = eps/2, inside the cap band
  CHECK(f_at(0.8, 0.8) < 1e-15);       // average >= 4 eps / 5

  for (double rb = 0; rb <= 1.0; rb += 0.05) {
    for (double rc = 0; rc <= 1.0; rc += 0.05) {
      double v = f_at(rb, rc);
      CHECK(v >= 0.0);
      CHECK(v <= 1.0);
    }
  }
}

TEST_CASE("cutoff interval conditions") {
  BumpSpec spec;
  spec.epsilon = 1;
  BumpResult bump = bump_function(spec);
  auto chi = [&](double a) { return bump.chi.eval({{"a", a}}); };

  // Exact statements quantize in double evaluation: the zero bands are
  // structurally exact (a smooth_step factor is 0), the one band carries
  // reciprocal rounding of order one ulp, and transition values adjacent
  // to a band edge can round onto the plateau.
  const double eps = 1.0;
  for (double a = 1e-4; a < eps; a += 1e-3) {
    double v = chi(a);
    if (a <= 0.2 * eps) {
      CHECK(v == 0.0);
    } else if (a < 0.4 * eps) {
      CHECK(v >= 0.0);
      CHECK(v <= 1.0);
    } else if (a <= 0.6 * eps) {
      CHECK(std::abs(v - 1.0) < 1e-12);
    } else if (a < 0.8 * eps) {
      CHECK(v >= 0.0);
      CHECK(v <= 1.0);
    } else {
      CHECK(v == 0.0);
    }
  }
  // Strictly interior values in the middle of each transition band.
  for (double a : {0.25, 0.3, 0.35}) {
    CHECK(chi(a) > 0.01);
    CHECK(chi(a) < 0.99);
  }
  for (double a : {0.65, 0.7, 0.75}) {
    CHECK(chi(a) > 0.01);
    CHECK(chi(a) < 0.99);
  }
}

TEST_CASE("bump seams are numerically C1") {
  BumpSpec spec;
  spec.epsilon = 1;
  spec.rho_cL = SmoothExpr::generator("t");
  SmoothExpr f = bump_function(spec).f;
  // Finite-difference derivative across the seams t/2 = eps/5 and 2eps/5.
  const double h = 1e-4;
  for (double seam : {0.4, 0.8}) {
    double left = (f.eval({{"t", seam - h}}) - f.eval({{"t", seam - 2 * h}})) / h;
    double right = (f.eval({{"t", seam + 2 * h}}) - f.eval({{"t", seam + h}})) / h;
    CHECK(std::abs(left - right) < 1e-6);
  }
}

TEST_CASE("partition of unity on the one-dimensional cone") {
  // Bumps at the apex (radial selector t) and at t = 1 (selector (t-1)^2).
  BumpSpec at_apex;
  at_apex.epsilon = 1;
  at_apex.rho_cL = SmoothExpr::generator("t");

  BumpSpec at_end;
  at_end.epsilon = 1;
  at_end.rho_cL = SmoothExpr::from_poly(Poly::parse("(t - 1)^2"));

  std::vector<std::map<std::string, double>> grid;
  for (int i = 0; i < 1000; ++i) grid.push_back({{"t", i / 999.0}});

  PartitionResult part = partition_of_unity({at_apex, at_end}, grid);
  REQUIRE(part.parts.size() == 2);
  for (const auto& point : grid) {
    double sum = 0;
    for (const auto& f : part.parts) {
      double v = f.eval(point);
      CHECK(v >= 0.0);
      sum += v;
    }
    CHECK(std::abs(sum - 1.0) < 1e-12);
  }
}

TEST_CASE("single region partition is constant one") {
  BumpSpec whole;
  whole.epsilon = 10;
  whole.rho_cL = SmoothExpr::generator("t");
  std::vector<std::map<std::string, double>> grid;
  for (int i = 0; i < 100; ++i) grid.push_back({{"t", i / 99.0}});
  PartitionResult part = partition_of_unity({whole}, grid);
  REQUIRE(part.parts.size() == 1);
  for (const auto& point : grid)
    CHECK(std::abs(part.parts[0].eval(point) - 1.0) < 1e-12);
}

TEST_CASE("cover gaps are detected") {
  BumpSpec left;
  left.epsilon = Scalar(1, 5);
  left.rho_cL = SmoothExpr::generator("t");
  BumpSpec right;
  right.epsilon = Scalar(1, 5);
  right.rho_cL = SmoothExpr::from_poly(Poly::parse("(t - 1)^2"));
  std::vector<std::map<std::string, double>> grid;
  for (int i = 0; i < 100; ++i) grid.push_back({{"t", i / 99.0}});
  CHECK_THROWS_AS(partition_of_unity({left, right}, grid), DomainError);
}

TEST_CASE("support containment in the declared region") {
  BumpSpec spec;
  spec.epsilon = 1;
  spec.rho_cL = SmoothExpr::generator("t");
  SmoothExpr f = bump_function(spec).f;
  for (int i = 0; i <= 400; ++i) {
    double t = i / 100.0;
    if (f.eval({{"t", t}}) > 1e-12) CHECK(t < 1.0);  // rho < eps
  }
}

TEST_CASE("separation of points") {
  StratifiedModel cone_model = StratifiedModel::make(
      {{"apex", 0, false}, {"ray", 1, true}},
      {{"apex", "ray", "apex closes the ray"}}, false,
      {PresentationKind::Embedded, "half line", {}, {}}, {"t"});

  std::map<std::string, double> apex{{"t", 0.0}};
  std::map<std::string, double> interior{{"t", 0.7}};

  SmoothExpr witness = separates_points(cone_model, apex, interior);
  CHECK(std::abs(witness.eval(apex)) < 1e-9);
  CHECK(std::abs(witness.eval(interior) - 1.0) < 1e-9);

  // Distant points: the bump at x2 vanishes at x1 exactly.
  std::map<std::string, double> far{{"t", 25.0}};
  SmoothExpr witness2 = separates_points(cone_model, far, interior);
  CHECK(witness2.eval(far) == 0.0);
  CHECK(witness2.eval(interior) == 1.0);

  CHECK_THROWS_AS(separates_points(cone_model, apex, apex), DomainError);
}
