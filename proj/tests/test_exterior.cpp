#include <doctest.h>

#include "helpers.hpp"
#include "stratsym/errors.hpp"
#include "stratsym/form.hpp"
#include "stratsym/symplectic.hpp"

using namespace stratsym;
using stratsym::testing::Rng;
using stratsym::testing::random_form;

namespace {

ChartPtr r2() { return make_coordinate_chart({"x", "y"}); }

ChartPtr kt_chart() {
  return make_ce_chart({"e1", "e2", "e3", "e4"}, {{4, 1, 2, Scalar(1)}});
}

Form dvar(const ChartPtr& chart, int i) { return Form::basis_one_form(chart, i); }

}  // namespace

TEST_CASE("wedge antisymmetry") {
  ChartPtr chart = r2();
  Form dx = dvar(chart, 0), dy = dvar(chart, 1);
  CHECK(wedge(dx, dx).is_zero());
  CHECK((wedge(dx, dy) + wedge(dy, dx)).is_zero());

  Form x_dy = Form::monomial(chart, Poly::variable("x"), WedgeMonomial{{1}});
  Form y_dx = Form::monomial(chart, Poly::variable("y"), WedgeMonomial{{0}});
  Form expected = Form::monomial(chart, -(Poly::variable("x") * Poly::variable("y")),
                                 WedgeMonomial{{0, 1}});
  CHECK(wedge(x_dy, y_dx) == expected);
}

TEST_CASE("wedge is graded-commutative and associative") {
  Rng rng(11);
  ChartPtr chart = make_coordinate_chart(darboux_names(2));
  for (int i = 0; i < 50; ++i) {
    Form a = stratsym::testing::random_homogeneous_form(rng, chart, rng.uniform(0, 4), 2, 2);
    Form b = stratsym::testing::random_homogeneous_form(rng, chart, rng.uniform(0, 4), 2, 2);
    Form c = random_form(rng, chart, 2, 2);
    if (a.is_zero() || b.is_zero()) continue;
    int sign = (a.degree() * b.degree()) % 2 == 0 ? 1 : -1;
    CHECK(wedge(a, b) == wedge(b, a) * Scalar(sign));
    CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
  }
}

TEST_CASE("chart mismatch is rejected") {
  Form a = dvar(r2(), 0);
  Form b = dvar(make_coordinate_chart({"s", "t"}), 0);
  CHECK_THROWS_AS(wedge(a, b), DomainError);
  CHECK_THROWS_AS(a + b, DomainError);
}

TEST_CASE("exterior derivative on coordinate charts") {
  ChartPtr chart = r2();
  Form x_dy = Form::monomial(chart, Poly::variable("x"), WedgeMonomial{{1}});
  Form dxdy = Form::monomial(chart, Poly::constant(1), WedgeMonomial{{0, 1}});
  CHECK(d(x_dy) == dxdy);
}

TEST_CASE("d squared vanishes on random forms") {
  Rng rng(21);
  ChartPtr coord = make_coordinate_chart(darboux_names(2));
  ChartPtr ce = kt_chart();
  for (int i = 0; i < 200; ++i) {
    CHECK(d(d(random_form(rng, coord, 3, 3))).is_zero());
    CHECK(d(d(random_form(rng, ce, 0, 3))).is_zero());
  }
}

TEST_CASE("d is a graded derivation") {
  Rng rng(31);
  ChartPtr coord = make_coordinate_chart(darboux_names(2));
  ChartPtr ce = kt_chart();
  for (const ChartPtr& chart : {coord, ce}) {
    int max_poly = chart->kind() == ChartKind::Coordinate ? 3 : 0;
    for (int i = 0; i < 60; ++i) {
      Form a = stratsym::testing::random_homogeneous_form(rng, chart, rng.uniform(0, 3), max_poly, 2);
      Form b = random_form(rng, chart, max_poly, 2);
      if (a.is_zero()) continue;
      int sign = a.degree() % 2 == 0 ? 1 : -1;
      CHECK(d(wedge(a, b)) == wedge(d(a), b) + wedge(a, d(b)) * Scalar(sign));
    }
  }
}

TEST_CASE("Kodaira-Thurston differential") {
  ChartPtr chart = kt_chart();
  Form e3 = dvar(chart, 2), e4 = dvar(chart, 3);
  // d e4 = -e1^e2
  Form de4 = Form::monomial(chart, Poly::constant(-1), WedgeMonomial{{0, 1}});
  CHECK(d(e4) == de4);
  // Leibniz: d(e3 ^ e4) = -e3 ^ d e4 = +e1^e2^e3.
  Form expected = Form::monomial(chart, Poly::constant(1), WedgeMonomial{{0, 1, 2}});
  CHECK(d(wedge(e3, e4)) == expected);
}

TEST_CASE("construction rejects non-Jacobi structure constants") {
  // d e1 = -e2^e3, d e2 = -e1^e4 gives d2 e1 = -e1^e3^e4 != 0.
  CHECK_THROWS_AS(
      make_ce_chart({"e1", "e2", "e3", "e4"}, {{1, 2, 3, Scalar(1)}, {2, 1, 4, Scalar(1)}}),
      DomainError);
  // Heisenberg-type constants pass.
  CHECK_NOTHROW(make_ce_chart({"e1", "e2", "e3", "e4"}, {{4, 1, 2, Scalar(1)}}));
}

TEST_CASE("bivector contraction on the plane") {
  SymplecticModel model = SymplecticModel::standard(1);
  const ChartPtr& chart = model.chart();
  Form f = Form::from_poly(chart, Poly::parse("x1 + y1^2"));
  CHECK(contract_bivector(model.bivector(), f).is_zero());

  Form dxdy = Form::monomial(chart, Poly::constant(1), WedgeMonomial{{0, 1}});
  CHECK(contract_bivector(model.bivector(), dxdy) == Form::from_scalar(chart, 1));
}

TEST_CASE("bivector contraction drops degree by two") {
  SymplecticModel model = SymplecticModel::standard(2);
  const ChartPtr& chart = model.chart();
  // names (x1, y1, x2, y2): dx1 ^ dy1 ^ dx2 contracts to dx2.
  Form three = Form::monomial(chart, Poly::constant(1), WedgeMonomial{{0, 1, 2}});
  CHECK(contract_bivector(model.bivector(), three) == dvar(chart, 2));

  Rng rng(41);
  for (int i = 0; i < 50; ++i) {
    Form a = stratsym::testing::random_homogeneous_form(rng, chart, rng.uniform(2, 4), 2, 3);
    Form out = contract_bivector(model.bivector(), a);
    if (!out.is_zero()) CHECK(out.degree() == a.degree() - 2);
    // linearity
    Form b = stratsym::testing::random_homogeneous_form(rng, chart, a.is_zero() ? 2 : a.degree(), 2, 3);
    CHECK(contract_bivector(model.bivector(), a + b) ==
          contract_bivector(model.bivector(), a) + contract_bivector(model.bivector(), b));
  }
}

TEST_CASE("contraction checks dimensions") {
  SymplecticModel r2_model = SymplecticModel::standard(1);
  SymplecticModel r4_model = SymplecticModel::standard(2);
  Form a = dvar(r4_model.chart(), 0);
  CHECK_THROWS_AS(contract_bivector(r2_model.bivector(), a), DomainError);
}

TEST_CASE("forms print in the wedge grammar") {
  SymplecticModel model = SymplecticModel::standard(1);
  Form f = Form::monomial(model.chart(), Poly::parse("2*x1"), WedgeMonomial{{0, 1}});
  CHECK(f.str() == "(2*x1)*dx1^dy1");
  CHECK(Form::zero(model.chart()).str() == "0");
}
