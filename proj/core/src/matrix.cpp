#include "zec/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "zec/errors.hpp"

namespace zec {

ComplexMatrix ComplexMatrix::identity(int n) {
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::from_rows(std::initializer_list<std::initializer_list<cx>> rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r > 0 ? static_cast<int>(rows.begin()->size()) : 0;
  ComplexMatrix m(r, c);
  int i = 0;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != c)
      throw DimensionMismatchError("from_rows: ragged row lengths");
    int j = 0;
    for (cx v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> entries) {
  const int n = static_cast<int>(entries.size());
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = entries[i];
  return m;
}

ComplexMatrix ComplexMatrix::outer(std::span<const cx> u, std::span<const cx> v) {
  ComplexMatrix m(static_cast<int>(u.size()), static_cast<int>(v.size()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m(i, j) = u[i] * std::conj(v[j]);
  return m;
}

ComplexMatrix ComplexMatrix::from_columns(const std::vector<std::vector<cx>>& cols) {
  if (cols.empty()) return {};
  const int r = static_cast<int>(cols.front().size());
  ComplexMatrix m(r, static_cast<int>(cols.size()));
  for (int j = 0; j < m.cols(); ++j) {
    if (static_cast<int>(cols[j].size()) != r)
      throw DimensionMismatchError("from_columns: ragged column lengths");
    for (int i = 0; i < r; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix m(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m(j, i) = std::conj((*this)(i, j));
  return m;
}

cx ComplexMatrix::trace() const {
  cx t = 0.0;
  for (int i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const cx& v : a_) s += std::norm(v);
  return std::sqrt(s);
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const cx& v : a_) m = std::max(m, std::abs(v));
  return m;
}

bool ComplexMatrix::is_hermitian(double tol) const {
  if (!is_square()) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = i; j < cols_; ++j)
      if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol) return false;
  return true;
}

bool ComplexMatrix::approx_equal(const ComplexMatrix& other, double tol) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) return false;
  for (size_t k = 0; k < a_.size(); ++k)
    if (std::abs(a_[k] - other.a_[k]) > tol) return false;
  return true;
}

std::vector<cx> ComplexMatrix::column(int c) const {
  std::vector<cx> v(rows_);
  for (int i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
  return v;
}

std::vector<cx> ComplexMatrix::apply(std::span<const cx> v) const {
  if (static_cast<int>(v.size()) != cols_)
    throw DimensionMismatchError("matrix-vector size mismatch");
  std::vector<cx> out(rows_, cx{0.0});
  for (int i = 0; i < rows_; ++i) {
    cx acc = 0.0;
    for (int j = 0; j < cols_; ++j) acc += (*this)(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw DimensionMismatchError("matrix addition shape mismatch");
  for (size_t k = 0; k < a_.size(); ++k) a_[k] += other.a_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw DimensionMismatchError("matrix subtraction shape mismatch");
  for (size_t k = 0; k < a_.size(); ++k) a_[k] -= other.a_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cx s) {
  for (cx& v : a_) v *= s;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionMismatchError("matrix product shape mismatch");
  ComplexMatrix out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int k = 0; k < a.cols(); ++k) {
      const cx aik = a(i, k);
      if (aik == cx{0.0}) continue;
      for (int j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

cx inner(std::span<const cx> u, std::span<const cx> v) {
  if (u.size() != v.size()) throw DimensionMismatchError("inner product size mismatch");
  cx s = 0.0;
  for (size_t i = 0; i < u.size(); ++i) s += std::conj(u[i]) * v[i];
  return s;
}

double vec_norm(std::span<const cx> v) {
  double s = 0.0;
  for (const cx& x : v) s += std::norm(x);
  return std::sqrt(s);
}

}  // namespace zec
