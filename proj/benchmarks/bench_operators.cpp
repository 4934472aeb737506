#include <benchmark/benchmark.h>

#include "stratsym/homology.hpp"
#include "stratsym/lefschetz.hpp"
#include "stratsym/models.hpp"

using namespace stratsym;

namespace {

Form dense_form(const SymplecticModel& model, int degree, int poly_degree) {
  Form f = Form::zero(model.chart());
  const auto& names = model.chart()->names();
  int counter = 1;
  for (const auto& w : wedge_basis(model.dimension(), degree)) {
    Poly coeff = Poly::constant(counter);
    if (model.chart()->kind() == ChartKind::Coordinate) {
      Exponents e(names.size(), 0);
      e[counter % names.size()] = poly_degree;
      Scalar c(counter, 3);
      c.canonicalize();
      coeff = coeff + Poly::term(c, names, e);
    }
    f += Form::monomial(model.chart(), coeff, w);
    ++counter;
  }
  return f;
}

void BM_Star(benchmark::State& state) {
  SymplecticModel model = SymplecticModel::standard(static_cast<int>(state.range(0)));
  Form a = dense_form(model, model.half_dimension(), 3);
  for (auto _ : state) {
    Form s = star(a, model);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_Star)->Arg(1)->Arg(2)->Arg(3);

void BM_DeltaCommutator(benchmark::State& state) {
  SymplecticModel model = SymplecticModel::standard(static_cast<int>(state.range(0)));
  Form a = dense_form(model, model.half_dimension(), 3);
  for (auto _ : state) {
    Form b = delta_commutator(a, model);
    benchmark::DoNotOptimize(b);
  }
}
BENCHMARK(BM_DeltaCommutator)->Arg(1)->Arg(2)->Arg(3);

void BM_LefschetzDecompose(benchmark::State& state) {
  SymplecticModel model = SymplecticModel::standard(static_cast<int>(state.range(0)));
  Form a = dense_form(model, model.half_dimension(), 2);
  for (auto _ : state) {
    PrimitiveDecomposition dec = lef_decompose(a, model);
    benchmark::DoNotOptimize(dec);
  }
}
BENCHMARK(BM_LefschetzDecompose)->Arg(1)->Arg(2)->Arg(3);

void BM_KodairaThurstonBetti(benchmark::State& state) {
  SymplecticModel model = *load_builtin("kodaira_thurston").symplectic;
  for (auto _ : state) {
    BettiTable table = betti(model, OperatorTag::ExteriorD);
    benchmark::DoNotOptimize(table);
  }
}
BENCHMARK(BM_KodairaThurstonBetti);

void BM_HarmonicSearch(benchmark::State& state) {
  SymplecticModel model = *load_builtin("kodaira_thurston").symplectic;
  std::vector<Form> classes = cohomology_basis(model, 2);
  for (auto _ : state) {
    for (const Form& cls : classes) {
      auto rep = harmonic_representative_search(model, cls);
      benchmark::DoNotOptimize(rep);
    }
  }
}
BENCHMARK(BM_HarmonicSearch);

void BM_FlowSteps(benchmark::State& state) {
  ModelCatalogEntry entry = load_builtin("cz2_cone");
  HamiltonianSystem system = make_system(entry, Poly::parse("u + v"));
  for (auto _ : state) {
    Trajectory traj = integrate(system, {1.0, 0.0, 0.0}, 1.0, 1e-3);
    benchmark::DoNotOptimize(traj);
  }
}
BENCHMARK(BM_FlowSteps);

}  // namespace

BENCHMARK_MAIN();
