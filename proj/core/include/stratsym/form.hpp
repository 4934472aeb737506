#pragma once

#include <map>
#include <string>
#include <vector>

#include "stratsym/chart.hpp"
#include "stratsym/linalg.hpp"
#include "stratsym/poly.hpp"

namespace stratsym {

/// Product of basis 1-forms with strictly increasing 0-based indices;
/// the canonical representative of its orientation class. Any wedge of
/// basis 1-forms equals +/- one of these.
struct WedgeMonomial {
  std::vector<int> indices;

  int degree() const { return static_cast<int>(indices.size()); }
  bool operator<(const WedgeMonomial& rhs) const;
  bool operator==(const WedgeMonomial& rhs) const { return indices == rhs.indices; }
};

/// Sorts `indices` into a canonical wedge monomial; returns the
/// permutation sign, or 0 if an index repeats.
int canonical_wedge(std::vector<int>& indices);

/// Differential form over a chart: a map from wedge monomials to
/// polynomial coefficients (constants on Chevalley-Eilenberg charts).
class Form {
 public:
  Form() = default;
  explicit Form(ChartPtr chart) : chart_(std::move(chart)) {}

  static Form zero(ChartPtr chart) { return Form(std::move(chart)); }
  /// 0-form with the given coefficient.
  static Form from_poly(ChartPtr chart, const Poly& p);
  static Form from_scalar(ChartPtr chart, const Scalar& c);
  /// Basis 1-form dx_i (coordinate) or e^i (CE); 0-based index.
  static Form basis_one_form(ChartPtr chart, int index);
  static Form monomial(ChartPtr chart, const Poly& coefficient, WedgeMonomial wedge);

  const ChartPtr& chart() const { return chart_; }
  const std::map<WedgeMonomial, Poly>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_homogeneous() const;
  /// Degree of a homogeneous form; -1 for zero. Throws
  /// DomainError(NonHomogeneous) on mixed-degree input.
  int degree() const;
  std::map<int, Form> homogeneous_parts() const;
  Form part(int degree) const;

  /// Coefficient of a wedge monomial (zero polynomial if absent).
  Poly coefficient(const WedgeMonomial& w) const;

  Form operator+(const Form& rhs) const;
  Form operator-(const Form& rhs) const;
  Form operator-() const;
  Form operator*(const Scalar& c) const;
  /// Multiply by a polynomial function (coordinate charts; on CE charts
  /// the polynomial must be constant).
  Form operator*(const Poly& p) const;
  Form& operator+=(const Form& rhs);
  Form& operator-=(const Form& rhs);

  bool operator==(const Form& rhs) const;
  bool operator!=(const Form& rhs) const { return !(*this == rhs); }

  std::string str() const;

 private:
  ChartPtr chart_;
  std::map<WedgeMonomial, Poly> terms_;

  void insert(const WedgeMonomial& w, const Poly& coeff);
  void check_coefficient(const Poly& coeff) const;

  friend Form wedge(const Form& a, const Form& b);
  friend Form d(const Form& a);
  friend Form contract_bivector(const MatQ& bivector, const Form& a);
};

/// Graded-commutative exterior product. Chart contents must agree
/// (DomainError(ChartMismatch) otherwise).
Form wedge(const Form& a, const Form& b);

/// Exterior derivative: coefficient-wise d p ^ dx_I on coordinate
/// charts, the structure-constant derivation on CE charts. d(d a) = 0.
Form d(const Form& a);

/// Interior contraction with a constant antisymmetric bivector matrix;
/// drops the degree by 2 (0 on forms of degree < 2). On a decomposable
/// argument f0 df1 ^ ... ^ df_k it equals
///   sum_{i<j} (-1)^{i+j+1} f0 G(df_i, df_j) df1 ^ ...^i ...^j ... ^ df_k.
Form contract_bivector(const MatQ& bivector, const Form& a);

/// All wedge monomials of the given degree in `dim` basis 1-forms.
std::vector<WedgeMonomial> wedge_basis(int dim, int degree);

bool same_chart(const Form& a, const Form& b);
void require_same_chart(const Form& a, const Form& b);

}  // namespace stratsym
