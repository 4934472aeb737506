#include "stratsym/chart.hpp"

#include <algorithm>

#include "stratsym/errors.hpp"

namespace stratsym {

namespace {

void check_dimension(std::size_t n) {
  if (n == 0 || n % 2 != 0)
    throw DomainError(ErrorKind::DimensionMismatch,
                      "chart dimension must be even and positive, got " + std::to_string(n));
}

void check_distinct(const std::vector<std::string>& names) {
  std::vector<std::string> sorted = names;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw DomainError(ErrorKind::InvalidModel, "duplicate chart coordinate name");
}

}  // namespace

ModelChart ModelChart::coordinate(std::vector<std::string> coordinate_names) {
  check_dimension(coordinate_names.size());
  check_distinct(coordinate_names);
  ModelChart chart;
  chart.kind_ = ChartKind::Coordinate;
  chart.names_ = std::move(coordinate_names);
  return chart;
}

ModelChart ModelChart::chevalley_eilenberg(
    std::vector<std::string> names,
    const std::vector<std::tuple<int, int, int, Scalar>>& constants) {
  check_dimension(names.size());
  check_distinct(names);
  ModelChart chart;
  chart.kind_ = ChartKind::ChevalleyEilenberg;
  chart.names_ = std::move(names);
  int dim = chart.dimension();
  for (const auto& [k, i, j, value] : constants) {
    if (k < 1 || k > dim || i < 1 || i > dim || j < 1 || j > dim || i == j)
      throw DomainError(ErrorKind::DimensionMismatch, "structure constant index out of range");
    if (value == 0) continue;
    int a = std::min(i, j), b = std::max(i, j);
    Scalar v = i < j ? value : Scalar(-value);
    auto key = std::make_tuple(k, a, b);
    auto it = chart.constants_.find(key);
    if (it != chart.constants_.end())
      throw DomainError(ErrorKind::InvalidModel, "duplicate structure constant entry");
    chart.constants_.emplace(key, v);
  }
  chart.validate_jacobi();
  return chart;
}

std::string ModelChart::one_form_name(int index) const {
  return kind_ == ChartKind::Coordinate ? "d" + names_[index] : names_[index];
}

Scalar ModelChart::structure_constant(int k, int i, int j) const {
  if (i == j) return 0;
  int a = std::min(i, j), b = std::max(i, j);
  auto it = constants_.find(std::make_tuple(k, a, b));
  if (it == constants_.end()) return 0;
  return i < j ? it->second : Scalar(-it->second);
}

bool ModelChart::operator==(const ModelChart& rhs) const {
  return kind_ == rhs.kind_ && names_ == rhs.names_ && constants_ == rhs.constants_;
}

void ModelChart::validate_jacobi() const {
  // d(d e^k) expanded over the basis of 3-forms; every coefficient must
  // vanish. With d e^k = -sum_{i<j} c^k_{ij} e^i e^j:
  //   d2 e^k = -sum_{i<j} c^k_{ij} (d e^i ^ e^j - e^i ^ d e^j)
  //          = sum_{i<j} sum_{a<b} c^k_{ij} (c^i_{ab} e^a e^b e^j - c^j_{ab} e^i e^a e^b).
  int dim = dimension();
  std::map<std::tuple<int, int, int>, Scalar> coeff;  // sorted triple -> value

  auto add_triple = [&](int p, int q, int r, const Scalar& value) {
    int v[3] = {p, q, r};
    int sign = 1;
    // Sort three indices counting transpositions; repeated index kills the term.
    for (int pass = 0; pass < 2; ++pass)
      for (int t = 0; t < 2; ++t)
        if (v[t] > v[t + 1]) {
          std::swap(v[t], v[t + 1]);
          sign = -sign;
        }
    if (v[0] == v[1] || v[1] == v[2]) return;
    coeff[std::make_tuple(v[0], v[1], v[2])] += sign * value;
  };

  for (int k = 1; k <= dim; ++k) {
    coeff.clear();
    for (const auto& [key, ckij] : constants_) {
      if (std::get<0>(key) != k) continue;
      int i = std::get<1>(key), j = std::get<2>(key);
      for (const auto& [key2, cab] : constants_) {
        int target = std::get<0>(key2);
        int a = std::get<1>(key2), b = std::get<2>(key2);
        if (target == i) add_triple(a, b, j, ckij * cab);
        if (target == j) add_triple(i, a, b, -ckij * cab);
      }
    }
    for (const auto& [triple, value] : coeff) {
      if (value != 0)
        throw DomainError(ErrorKind::JacobiViolation,
                          "structure constants violate d^2 = 0 on basis form " +
                              names_[k - 1]);
    }
  }
}

ChartPtr make_coordinate_chart(std::vector<std::string> names) {
  return std::make_shared<ModelChart>(ModelChart::coordinate(std::move(names)));
}

ChartPtr make_ce_chart(std::vector<std::string> names,
                       const std::vector<std::tuple<int, int, int, Scalar>>& constants) {
  return std::make_shared<ModelChart>(ModelChart::chevalley_eilenberg(std::move(names), constants));
}

std::vector<std::string> darboux_names(int n) {
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) {
    names.push_back("x" + std::to_string(i));
    names.push_back("y" + std::to_string(i));
  }
  return names;
}

}  // namespace stratsym
