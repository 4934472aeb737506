#pragma once

#include <optional>
#include <vector>

#include "stratsym/symplectic.hpp"

namespace stratsym {

/// One layer of a Lefschetz decomposition: L^wedge_power applied to a
/// primitive form of degree (input_degree - 2*wedge_power).
struct PrimitiveComponent {
  int wedge_power = 0;
  Form primitive;
};

/// a = sum_r L^r (components[r].primitive), with every component
/// primitive and the reconstruction exact.
struct PrimitiveDecomposition {
  int input_degree = -1;
  std::vector<PrimitiveComponent> components;

  Form reconstruct(const SymplecticModel& model) const;
};

/// c_{n,k}: the constant with gamma = c_{n,k} (L*)^k L^k gamma for
/// primitive gamma of degree n-k. Equals 1/(k!)^2 under this library's
/// pairing normalization; the brute-force solve that pins the value is
/// kept as a test oracle.
Scalar lefschetz_constant(int n, int k);

/// Primitivity of a homogeneous form of degree n-k: L^{k+1} a == 0
/// (equivalently L* a == 0). Degrees above n raise
/// DomainError(DegreeAboveMiddle).
bool is_primitive(const Form& a, const SymplecticModel& model);

/// Splits a homogeneous form into wedge powers of primitive layers,
/// peeling the lowest-degree primitive piece first: apply the power of L
/// that kills every higher layer, recover the survivor through
/// c_{n,k} (L*)^k L^k, subtract, repeat. The zero form decomposes into
/// no components.
PrimitiveDecomposition lef_decompose(const Form& a, const SymplecticModel& model);

/// d a == 0 and delta a == 0, exactly.
bool is_harmonic(const Form& a, const SymplecticModel& model);

}  // namespace stratsym
