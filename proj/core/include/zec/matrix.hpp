#pragma once

#include <complex>
#include <initializer_list>
#include <span>
#include <vector>

namespace zec {

using cx = std::complex<double>;

/// Dense complex matrix, row-major. Small dimensions (products of channel
/// dimensions, at most ~125), so no attempt at blocking or sparsity.
/// Equality is tolerance-parameterized via approx_equal, never bitwise.
class ComplexMatrix {
public:
  ComplexMatrix() = default;
  ComplexMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

  static ComplexMatrix identity(int n);
  static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<cx>> rows);
  static ComplexMatrix diagonal(std::span<const double> entries);
  /// u v^dagger
  static ComplexMatrix outer(std::span<const cx> u, std::span<const cx> v);
  /// Columns given as equal-length vectors.
  static ComplexMatrix from_columns(const std::vector<std::vector<cx>>& cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  cx& operator()(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  const cx& operator()(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

  ComplexMatrix adjoint() const;
  cx trace() const;
  double frobenius_norm() const;
  double max_abs() const;
  bool is_hermitian(double tol) const;
  bool approx_equal(const ComplexMatrix& other, double tol) const;

  std::vector<cx> column(int c) const;
  std::vector<cx> apply(std::span<const cx> v) const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(cx s);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(cx s, ComplexMatrix m) { return m *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<cx> a_;
};

/// <u|v> with conjugation on the first argument.
cx inner(std::span<const cx> u, std::span<const cx> v);
double vec_norm(std::span<const cx> v);

}  // namespace zec
