#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "stratsym/form.hpp"
#include "stratsym/symplectic.hpp"

namespace stratsym::testing {

/// Deterministic generator; draws use explicit modulo so sequences do
/// not depend on the standard library's distribution implementations.
struct Rng {
  std::mt19937_64 engine;

  explicit Rng(std::uint64_t seed) : engine(seed) {}

  int uniform(int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(engine() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  Scalar rational() {
    Scalar s(uniform(-9, 9), uniform(1, 4));
    s.canonicalize();
    return s;
  }

  Scalar nonzero_rational() {
    for (;;) {
      Scalar s = rational();
      if (s != 0) return s;
    }
  }
};

inline Poly random_poly(Rng& rng, const std::vector<std::string>& vars, int max_degree,
                        int max_terms) {
  Poly p = Poly::zero();
  int terms = rng.uniform(1, max_terms);
  for (int t = 0; t < terms; ++t) {
    Exponents e(vars.size(), 0);
    int degree = rng.uniform(0, max_degree);
    for (int d = 0; d < degree; ++d) e[rng.uniform(0, static_cast<int>(vars.size()) - 1)] += 1;
    p += Poly::term(rng.rational(), vars, e);
  }
  return p;
}

/// Homogeneous random form of the given degree; polynomial coefficients
/// on coordinate charts with total polynomial degree <= max_poly_degree.
inline Form random_homogeneous_form(Rng& rng, const ChartPtr& chart, int degree,
                                    int max_poly_degree, int max_terms) {
  Form f = Form::zero(chart);
  auto basis = wedge_basis(chart->dimension(), degree);
  if (basis.empty()) return f;
  int terms = rng.uniform(1, max_terms);
  for (int t = 0; t < terms; ++t) {
    const WedgeMonomial& w = basis[rng.uniform(0, static_cast<int>(basis.size()) - 1)];
    Poly coeff = chart->kind() == ChartKind::Coordinate
                     ? random_poly(rng, chart->names(), max_poly_degree, 2)
                     : Poly::constant(rng.rational());
    f += Form::monomial(chart, coeff, w);
  }
  return f;
}

/// Mixed-degree random form.
inline Form random_form(Rng& rng, const ChartPtr& chart, int max_poly_degree, int max_terms) {
  int degree = rng.uniform(0, chart->dimension());
  Form f = random_homogeneous_form(rng, chart, degree, max_poly_degree, max_terms);
  if (rng.uniform(0, 1) == 1) {
    int other = rng.uniform(0, chart->dimension());
    f += random_homogeneous_form(rng, chart, other, max_poly_degree, max_terms);
  }
  return f;
}

/// Homogeneous random form whose total degree (polynomial + form) is
/// exactly `total`, for graded-piece tests.
inline Form random_piece_form(Rng& rng, const ChartPtr& chart, int degree, int total,
                              int max_terms) {
  Form f = Form::zero(chart);
  auto basis = wedge_basis(chart->dimension(), degree);
  int poly_degree = total - degree;
  if (basis.empty() || poly_degree < 0) return f;
  auto monos = monomials_of_degree(chart->dimension(), poly_degree);
  int terms = rng.uniform(1, max_terms);
  for (int t = 0; t < terms; ++t) {
    const WedgeMonomial& w = basis[rng.uniform(0, static_cast<int>(basis.size()) - 1)];
    const Exponents& e = monos[rng.uniform(0, static_cast<int>(monos.size()) - 1)];
    f += Form::monomial(chart, Poly::term(rng.rational(), chart->names(), e), w);
  }
  return f;
}

/// Brute-force Lefschetz constant: compute the primitive forms of
/// degree n-k as the kernel of L^{k+1} on constant coefficients, then
/// solve c (L*)^k L^k p = p on that basis. Returns nullopt if no single
/// constant works.
inline std::optional<Scalar> brute_force_lefschetz_constant(const SymplecticModel& model,
                                                            int k) {
  int n = model.half_dimension();
  int degree = n - k;

  auto monomials = wedge_basis(2 * n, degree);
  std::vector<Form> basis;
  for (const auto& w : monomials)
    basis.push_back(Form::monomial(model.chart(), Poly::constant(1), w));

  auto iterate_L = [&](Form a, int times) {
    for (int i = 0; i < times; ++i) a = L(a, model);
    return a;
  };

  auto target = wedge_basis(2 * n, degree + 2 * (k + 1));
  MatQ m(static_cast<int>(target.size()), static_cast<int>(basis.size()));
  for (std::size_t c = 0; c < basis.size(); ++c) {
    Form image = iterate_L(basis[c], k + 1);
    for (std::size_t r = 0; r < target.size(); ++r) {
      Poly coeff = image.coefficient(target[r]);
      m.at(static_cast<int>(r), static_cast<int>(c)) =
          coeff.is_zero() ? Scalar(0) : coeff.constant_value();
    }
  }

  std::optional<Scalar> ratio;
  for (const auto& kernel_vec : m.kernel_basis()) {
    Form p = Form::zero(model.chart());
    for (std::size_t i = 0; i < kernel_vec.size(); ++i)
      if (kernel_vec[i] != 0) p += basis[i] * kernel_vec[i];
    if (p.is_zero()) continue;
    Form transported = iterate_L(p, k);
    for (int q = 0; q < k; ++q) transported = Lstar(transported, model);
    for (const auto& [w, coeff] : p.terms()) {
      Poly image_coeff = transported.coefficient(w);
      if (image_coeff.is_zero()) return std::nullopt;
      Scalar c = coeff.constant_value() / image_coeff.constant_value();
      if (ratio && *ratio != c) return std::nullopt;
      ratio = c;
    }
    if (!(transported * *ratio == p)) return std::nullopt;
  }
  return ratio;
}

/// Test-side Gaussian elimination, kept separate from MatQ so rank
/// assertions cross-check an independent code path.
inline int oracle_rank(std::vector<std::vector<Scalar>> rows) {
  std::size_t rank = 0;
  std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      Scalar f = rows[r][col] / rows[rank][col];
      for (std::size_t c = col; c < cols; ++c) rows[r][c] -= f * rows[rank][c];
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

}  // namespace stratsym::testing
