#include <doctest.h>

#include "helpers.hpp"
#include "stratsym/errors.hpp"
#include "stratsym/homology.hpp"
#include "stratsym/lefschetz.hpp"
#include "stratsym/models.hpp"

using namespace stratsym;
using stratsym::testing::Rng;
using stratsym::testing::random_homogeneous_form;

using stratsym::testing::brute_force_lefschetz_constant;

TEST_CASE("primitivity on explicit forms") {
  SymplecticModel model = SymplecticModel::standard(2);
  const ChartPtr& chart = model.chart();

  // Any 0-form is primitive on R^4: omega^3 = 0.
  CHECK(is_primitive(Form::from_poly(chart, Poly::parse("x1^2 + y2")), model));
  // omega itself is not: L(omega) = omega^2 != 0.
  CHECK_FALSE(is_primitive(model.omega_form(), model));
  // dx1 ^ dx2 pairs to zero under G.
  Form dx1dx2 = Form::monomial(chart, Poly::constant(1), WedgeMonomial{{0, 2}});
  CHECK(is_primitive(dx1dx2, model));
  CHECK(Lstar(dx1dx2, model).is_zero());

  CHECK_THROWS_AS(is_primitive(model.volume(), model), DomainError);
}

TEST_CASE("primitivity tests agree") {
  Rng rng(61);
  for (int n : {1, 2, 3}) {
    SymplecticModel model = SymplecticModel::standard(n);
    for (int degree = 0; degree <= n; ++degree) {
      for (int i = 0; i < 20; ++i) {
        Form a = random_homogeneous_form(rng, model.chart(), degree, 2, 2);
        CHECK(is_primitive(a, model) == Lstar(a, model).is_zero());
      }
    }
  }
}

TEST_CASE("frozen Lefschetz constants match the brute-force solve") {
  for (int n : {1, 2, 3}) {
    SymplecticModel model = SymplecticModel::standard(n);
    for (int k = 0; k <= n; ++k) {
      auto solved = brute_force_lefschetz_constant(model, k);
      REQUIRE(solved.has_value());
      CHECK(*solved == lefschetz_constant(n, k));
      CHECK(*solved == Scalar(1) / (factorial(k) * factorial(k)));
    }
  }
}

TEST_CASE("decomposition of primitive inputs") {
  SymplecticModel model = SymplecticModel::standard(2);
  const ChartPtr& chart = model.chart();

  Form middle = Form::monomial(chart, Poly::parse("x1"), WedgeMonomial{{0, 2}});
  REQUIRE(is_primitive(middle, model));
  PrimitiveDecomposition direct = lef_decompose(middle, model);
  REQUIRE(direct.components.size() == 1);
  CHECK(direct.components[0].wedge_power == 0);
  CHECK(direct.components[0].primitive == middle);
  // Middle-degree primitives are exactly the forms L kills.
  CHECK(L(middle, model).is_zero());

  // Below the middle degree L is injective and the layer is recovered.
  Form low = Form::monomial(chart, Poly::parse("x1"), WedgeMonomial{{0}});
  REQUIRE(is_primitive(low, model));
  PrimitiveDecomposition lifted = lef_decompose(L(low, model), model);
  REQUIRE(lifted.components.size() == 1);
  CHECK(lifted.components[0].wedge_power == 1);
  CHECK(lifted.components[0].primitive == low);

  CHECK(lef_decompose(Form::zero(chart), model).components.empty());
}

TEST_CASE("decomposition reconstructs and yields primitive layers") {
  Rng rng(62);
  for (int n : {1, 2, 3}) {
    SymplecticModel model = SymplecticModel::standard(n);
    for (int i = 0; i < 100; ++i) {
      Form a = random_homogeneous_form(rng, model.chart(), rng.uniform(0, 2 * n), 2, 3);
      PrimitiveDecomposition dec = lef_decompose(a, model);
      CHECK(dec.reconstruct(model) == a);
      for (const auto& comp : dec.components) {
        CHECK_FALSE(comp.primitive.is_zero());
        CHECK(is_primitive(comp.primitive, model));
      }
    }
  }
}

TEST_CASE("decomposition recovers known layers") {
  Rng rng(63);
  SymplecticModel model = SymplecticModel::standard(3);
  for (int i = 0; i < 30; ++i) {
    // Build sum L^r p_r from random primitives of degree 1 and 3.
    Form p1 = Form::zero(model.chart());
    for (int tries = 0; tries < 10 && p1.is_zero(); ++tries) {
      Form candidate = random_homogeneous_form(rng, model.chart(), 1, 1, 2);
      if (is_primitive(candidate, model)) p1 = candidate;
    }
    PrimitiveDecomposition p3_dec =
        lef_decompose(random_homogeneous_form(rng, model.chart(), 3, 1, 2), model);
    Form p3 = Form::zero(model.chart());
    for (const auto& comp : p3_dec.components)
      if (comp.wedge_power == 0) p3 = comp.primitive;
    if (p1.is_zero() || p3.is_zero()) continue;

    Form input = p3 + L(p1, model);
    PrimitiveDecomposition dec = lef_decompose(input, model);
    REQUIRE(dec.components.size() == 2);
    CHECK(dec.components[0].wedge_power == 1);
    CHECK(dec.components[0].primitive == p1);
    CHECK(dec.components[1].wedge_power == 0);
    CHECK(dec.components[1].primitive == p3);
  }
}

TEST_CASE("harmonicity") {
  SymplecticModel torus = *load_builtin("torus4").symplectic;
  CHECK(is_harmonic(Form::from_scalar(torus.chart(), Scalar(7)), torus));
  CHECK(is_harmonic(torus.volume(), torus));

  SymplecticModel kt = *load_builtin("kodaira_thurston").symplectic;
  CHECK(is_harmonic(kt.volume(), kt));
  Form e4 = Form::basis_one_form(kt.chart(), 3);
  CHECK_FALSE(is_harmonic(e4, kt));
  CHECK_FALSE(d(e4).is_zero());
}
