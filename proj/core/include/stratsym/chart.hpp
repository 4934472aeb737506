#pragma once

#include <map>
#include <memory>
#include <string>
#include <tuple>
#include <vector>

#include "stratsym/rational.hpp"

namespace stratsym {

enum class ChartKind { Coordinate, ChevalleyEilenberg };

/// Local model underlying a space of differential forms: either a
/// coordinate chart on R^{2n} (basis 1-forms are the coordinate
/// differentials, coefficients are polynomials), or a Chevalley-Eilenberg
/// chart given by structure constants c^k_{ij} with
/// d e^k = -sum_{i<j} c^k_{ij} e^i ^ e^j and constant coefficients.
class ModelChart {
 public:
  /// Coordinate chart; dimension = names.size(), must be even positive.
  static ModelChart coordinate(std::vector<std::string> coordinate_names);

  /// CE chart from nonzero structure constants (k, i, j, value), 1-based,
  /// i < j. Construction verifies d(d e^k) = 0 for every k and throws
  /// DomainError(JacobiViolation) otherwise.
  static ModelChart chevalley_eilenberg(
      std::vector<std::string> names,
      const std::vector<std::tuple<int, int, int, Scalar>>& constants);

  ChartKind kind() const { return kind_; }
  int dimension() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }

  /// Basis 1-form label for output: coordinate charts get a "d" prefix.
  std::string one_form_name(int index) const;

  /// c^k_{ij} with antisymmetry in (i, j); all 1-based.
  Scalar structure_constant(int k, int i, int j) const;
  const std::map<std::tuple<int, int, int>, Scalar>& structure_constants() const {
    return constants_;
  }

  bool operator==(const ModelChart& rhs) const;
  bool operator!=(const ModelChart& rhs) const { return !(*this == rhs); }

 private:
  ModelChart() = default;
  ChartKind kind_ = ChartKind::Coordinate;
  std::vector<std::string> names_;
  std::map<std::tuple<int, int, int>, Scalar> constants_;  // key (k, i, j) with i < j

  void validate_jacobi() const;
};

using ChartPtr = std::shared_ptr<const ModelChart>;

ChartPtr make_coordinate_chart(std::vector<std::string> names);
ChartPtr make_ce_chart(std::vector<std::string> names,
                       const std::vector<std::tuple<int, int, int, Scalar>>& constants);

/// Standard symplectic coordinate names (x1, y1, ..., xn, yn).
std::vector<std::string> darboux_names(int n);

}  // namespace stratsym
