#include "stratsym/linalg.hpp"

#include <stdexcept>

namespace stratsym {

MatQ MatQ::identity(int n) {
  MatQ m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

MatQ MatQ::from_columns(const std::vector<VecQ>& columns, int rows) {
  MatQ m(rows, static_cast<int>(columns.size()));
  for (int c = 0; c < m.cols(); ++c) {
    if (static_cast<int>(columns[c].size()) != rows)
      throw std::invalid_argument("column length mismatch");
    for (int r = 0; r < rows; ++r) m.at(r, c) = columns[c][r];
  }
  return m;
}

MatQ MatQ::transposed() const {
  MatQ t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

MatQ MatQ::operator*(const MatQ& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("matmul shape mismatch");
  MatQ out(rows_, rhs.cols_);
  for (int r = 0; r < rows_; ++r)
    for (int k = 0; k < cols_; ++k) {
      if (at(r, k) == 0) continue;
      for (int c = 0; c < rhs.cols_; ++c) out.at(r, c) += at(r, k) * rhs.at(k, c);
    }
  return out;
}

bool MatQ::operator==(const MatQ& rhs) const {
  return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
}

MatQ MatQ::rref(std::vector<int>* pivot_cols) const {
  MatQ m = *this;
  int lead = 0;
  for (int col = 0; col < cols_ && lead < rows_; ++col) {
    int pivot = -1;
    for (int r = lead; r < rows_; ++r) {
      if (m.at(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != lead)
      for (int c = 0; c < cols_; ++c) std::swap(m.at(pivot, c), m.at(lead, c));
    Scalar inv = 1 / m.at(lead, col);
    for (int c = 0; c < cols_; ++c) m.at(lead, c) *= inv;
    for (int r = 0; r < rows_; ++r) {
      if (r == lead || m.at(r, col) == 0) continue;
      Scalar f = m.at(r, col);
      for (int c = 0; c < cols_; ++c) m.at(r, c) -= f * m.at(lead, c);
    }
    if (pivot_cols) pivot_cols->push_back(col);
    ++lead;
  }
  return m;
}

int MatQ::rank() const {
  std::vector<int> pivots;
  rref(&pivots);
  return static_cast<int>(pivots.size());
}

Scalar MatQ::det() const {
  if (rows_ != cols_) throw std::invalid_argument("det of non-square matrix");
  MatQ m = *this;
  Scalar result = 1;
  for (int col = 0; col < cols_; ++col) {
    int pivot = -1;
    for (int r = col; r < rows_; ++r) {
      if (m.at(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return 0;
    if (pivot != col) {
      for (int c = 0; c < cols_; ++c) std::swap(m.at(pivot, c), m.at(col, c));
      result = -result;
    }
    result *= m.at(col, col);
    Scalar inv = 1 / m.at(col, col);
    for (int r = col + 1; r < rows_; ++r) {
      if (m.at(r, col) == 0) continue;
      Scalar f = m.at(r, col) * inv;
      for (int c = col; c < cols_; ++c) m.at(r, c) -= f * m.at(col, c);
    }
  }
  return result;
}

std::optional<MatQ> MatQ::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
  MatQ aug(rows_, 2 * cols_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) aug.at(r, c) = at(r, c);
    aug.at(r, cols_ + r) = 1;
  }
  std::vector<int> pivots;
  MatQ red = aug.rref(&pivots);
  if (static_cast<int>(pivots.size()) != rows_) return std::nullopt;
  for (int i = 0; i < rows_; ++i)
    if (pivots[i] != i) return std::nullopt;
  MatQ inv(rows_, cols_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) inv.at(r, c) = red.at(r, cols_ + c);
  return inv;
}

std::vector<VecQ> MatQ::kernel_basis() const {
  std::vector<int> pivots;
  MatQ red = rref(&pivots);
  std::vector<bool> is_pivot(cols_, false);
  for (int c : pivots) is_pivot[c] = true;

  std::vector<VecQ> basis;
  for (int free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    VecQ v(cols_, Scalar(0));
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -red.at(static_cast<int>(i), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<VecQ> MatQ::solve(const MatQ& a, const VecQ& b) {
  if (static_cast<int>(b.size()) != a.rows_) throw std::invalid_argument("solve shape mismatch");
  MatQ aug(a.rows_, a.cols_ + 1);
  for (int r = 0; r < a.rows_; ++r) {
    for (int c = 0; c < a.cols_; ++c) aug.at(r, c) = a.at(r, c);
    aug.at(r, a.cols_) = b[r];
  }
  std::vector<int> pivots;
  MatQ red = aug.rref(&pivots);
  for (int p : pivots)
    if (p == a.cols_) return std::nullopt;  // row [0 ... 0 | 1]
  VecQ x(a.cols_, Scalar(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = red.at(static_cast<int>(i), a.cols_);
  return x;
}

VecQ MatQ::apply(const VecQ& x) const {
  if (static_cast<int>(x.size()) != cols_) throw std::invalid_argument("apply shape mismatch");
  VecQ y(rows_, Scalar(0));
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c)
      if (at(r, c) != 0 && x[c] != 0) y[r] += at(r, c) * x[c];
  return y;
}

int span_rank(const std::vector<VecQ>& vectors) {
  if (vectors.empty()) return 0;
  return MatQ::from_columns(vectors, static_cast<int>(vectors[0].size())).rank();
}

bool same_span(const std::vector<VecQ>& a, const std::vector<VecQ>& b) {
  if (a.empty() && b.empty()) return true;
  int dim = static_cast<int>(a.empty() ? b[0].size() : a[0].size());
  std::vector<VecQ> joint = a;
  joint.insert(joint.end(), b.begin(), b.end());
  int ra = a.empty() ? 0 : MatQ::from_columns(a, dim).rank();
  int rb = b.empty() ? 0 : MatQ::from_columns(b, dim).rank();
  int rj = MatQ::from_columns(joint, dim).rank();
  return ra == rb && ra == rj;
}

bool in_span(const std::vector<VecQ>& basis, const VecQ& v) {
  bool zero = true;
  for (const auto& x : v)
    if (x != 0) zero = false;
  if (zero) return true;
  if (basis.empty()) return false;
  std::vector<VecQ> joint = basis;
  joint.push_back(v);
  int dim = static_cast<int>(v.size());
  return MatQ::from_columns(basis, dim).rank() == MatQ::from_columns(joint, dim).rank();
}

std::vector<VecQ> intersect_spans(const std::vector<VecQ>& a, const std::vector<VecQ>& b) {
  if (a.empty() || b.empty()) return {};
  int dim = static_cast<int>(a[0].size());
  // Solve A u = B v: kernel of [A | -B]; intersection vectors are A u.
  MatQ joint(dim, static_cast<int>(a.size() + b.size()));
  for (int c = 0; c < static_cast<int>(a.size()); ++c)
    for (int r = 0; r < dim; ++r) joint.at(r, c) = a[c][r];
  for (int c = 0; c < static_cast<int>(b.size()); ++c)
    for (int r = 0; r < dim; ++r) joint.at(r, static_cast<int>(a.size()) + c) = -b[c][r];

  std::vector<VecQ> result;
  for (const auto& k : joint.kernel_basis()) {
    VecQ v(dim, Scalar(0));
    bool nonzero = false;
    for (std::size_t c = 0; c < a.size(); ++c) {
      if (k[c] == 0) continue;
      for (int r = 0; r < dim; ++r) v[r] += k[c] * a[c][r];
    }
    for (const auto& x : v)
      if (x != 0) nonzero = true;
    if (nonzero) result.push_back(std::move(v));
  }
  return result;
}

}  // namespace stratsym
