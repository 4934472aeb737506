#pragma once

#include <optional>
#include <vector>

#include "stratsym/rational.hpp"

namespace stratsym {

using VecQ = std::vector<Scalar>;

/// Dense matrix over exact rationals with fraction Gaussian elimination.
/// Everything downstream (Betti numbers, Lefschetz constants, duality
/// verdicts) rides on these ranks being exact.
class MatQ {
 public:
  MatQ() = default;
  MatQ(int rows, int cols) : rows_(rows), cols_(cols), data_(rows * cols, Scalar(0)) {}

  static MatQ identity(int n);
  static MatQ from_columns(const std::vector<VecQ>& columns, int rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Scalar& at(int r, int c) { return data_[r * cols_ + c]; }
  const Scalar& at(int r, int c) const { return data_[r * cols_ + c]; }

  MatQ transposed() const;
  MatQ operator*(const MatQ& rhs) const;
  bool operator==(const MatQ& rhs) const;

  /// Reduced row echelon form; pivot column indices appended to
  /// `pivot_cols` when provided.
  MatQ rref(std::vector<int>* pivot_cols = nullptr) const;

  int rank() const;
  Scalar det() const;
  std::optional<MatQ> inverse() const;

  /// Basis of the right null space {x : Ax = 0}.
  std::vector<VecQ> kernel_basis() const;

  /// One solution of Ax = b, or nullopt when inconsistent.
  static std::optional<VecQ> solve(const MatQ& a, const VecQ& b);

  VecQ apply(const VecQ& x) const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Scalar> data_;
};

/// Rank of the span of vectors (each of equal length).
int span_rank(const std::vector<VecQ>& vectors);

/// true when span(a) == span(b).
bool same_span(const std::vector<VecQ>& a, const std::vector<VecQ>& b);

/// true when v lies in span(basis).
bool in_span(const std::vector<VecQ>& basis, const VecQ& v);

/// Basis of span(a) ∩ span(b).
std::vector<VecQ> intersect_spans(const std::vector<VecQ>& a, const std::vector<VecQ>& b);

}  // namespace stratsym
