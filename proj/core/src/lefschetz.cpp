#include "stratsym/lefschetz.hpp"

#include <algorithm>

#include "stratsym/errors.hpp"

namespace stratsym {

Form PrimitiveDecomposition::reconstruct(const SymplecticModel& model) const {
  Form sum = Form::zero(model.chart());
  for (const auto& comp : components) {
    Form term = comp.primitive;
    for (int r = 0; r < comp.wedge_power; ++r) term = L(term, model);
    sum += term;
  }
  return sum;
}

Scalar lefschetz_constant(int n, int k) {
  (void)n;  // independent of n under this normalization
  Scalar kf = factorial(k);
  return 1 / (kf * kf);
}

namespace {

Form iterate_L(Form a, int times, const SymplecticModel& model) {
  for (int i = 0; i < times; ++i) a = L(a, model);
  return a;
}

Form iterate_Lstar(Form a, int times, const SymplecticModel& model) {
  for (int i = 0; i < times; ++i) a = Lstar(a, model);
  return a;
}

}  // namespace

bool is_primitive(const Form& a, const SymplecticModel& model) {
  if (a.is_zero()) return true;
  int deg = a.degree();  // NonHomogeneous on mixed input
  int n = model.half_dimension();
  if (deg > n)
    throw DomainError(ErrorKind::DegreeAboveMiddle,
                      "primitivity is defined for degrees <= n");
  int k = n - deg;
  return iterate_L(a, k + 1, model).is_zero();
}

PrimitiveDecomposition lef_decompose(const Form& a, const SymplecticModel& model) {
  PrimitiveDecomposition result;
  if (a.is_zero()) return result;

  int m = a.degree();
  int n = model.half_dimension();
  result.input_degree = m;

  Form rest = a;
  // Layers L^r p_d exist for primitive degrees d = m-2r with
  // d >= max(m - 2*floor(m/2), ...) and d <= min(m, 2n - m).
  int d_low = m % 2;
  int d_high = std::min(m, 2 * n - m);
  for (int degree = d_low; degree <= d_high && !rest.is_zero(); degree += 2) {
    int r = (m - degree) / 2;
    // L^s annihilates every layer of primitive degree > `degree` and
    // sends this layer onto L^{n-degree} p.
    int s = n - degree - r;
    Form b = iterate_L(rest, s, model);
    if (b.is_zero()) continue;
    Form p = iterate_Lstar(b, n - degree, model) * lefschetz_constant(n, n - degree);
    if (p.is_zero()) continue;
    rest -= iterate_L(p, r, model);
    result.components.push_back({r, std::move(p)});
  }
  if (!rest.is_zero())
    throw DomainError(ErrorKind::InvalidModel, "Lefschetz decomposition did not terminate");
  return result;
}

bool is_harmonic(const Form& a, const SymplecticModel& model) {
  return d(a).is_zero() && delta_commutator(a, model).is_zero();
}

}  // namespace stratsym
