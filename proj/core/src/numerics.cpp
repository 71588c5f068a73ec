#include "zec/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "zec/errors.hpp"

namespace zec {

namespace {

// One cyclic sweep of Jacobi rotations over all (p, q) pairs. Returns the
// number of rotations applied. Off-diagonal entries below `threshold` are
// left alone.
int jacobi_sweep(ComplexMatrix& a, ComplexMatrix& v, double threshold) {
  const int n = a.rows();
  int rotations = 0;
  for (int p = 0; p < n - 1; ++p) {
    for (int q = p + 1; q < n; ++q) {
      const cx apq = a(p, q);
      const double r = std::abs(apq);
      if (r <= threshold) continue;
      ++rotations;

      const double app = a(p, p).real();
      const double aqq = a(q, q).real();
      const cx phase = apq / r;  // e^{i phi}

      // tan(theta) for the rotation that zeroes the (p,q) entry.
      const double tau = (aqq - app) / (2.0 * r);
      double t;
      if (tau >= 0.0)
        t = 1.0 / (tau + std::sqrt(1.0 + tau * tau));
      else
        t = -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
      const double c = 1.0 / std::sqrt(1.0 + t * t);
      const double s = t * c;

      // A <- U^dagger A U with U = [[c, s e^{i phi}], [-s e^{-i phi}, c]]
      // embedded in rows/columns p, q. Columns first, then rows.
      for (int i = 0; i < n; ++i) {
        const cx aip = a(i, p);
        const cx aiq = a(i, q);
        a(i, p) = c * aip - s * std::conj(phase) * aiq;
        a(i, q) = s * phase * aip + c * aiq;
      }
      for (int j = 0; j < n; ++j) {
        const cx apj = a(p, j);
        const cx aqj = a(q, j);
        a(p, j) = c * apj - s * phase * aqj;
        a(q, j) = s * std::conj(phase) * apj + c * aqj;
      }
      // Clean up the entries the rotation was built to zero.
      a(p, q) = 0.0;
      a(q, p) = 0.0;
      a(p, p) = cx{a(p, p).real(), 0.0};
      a(q, q) = cx{a(q, q).real(), 0.0};

      for (int i = 0; i < n; ++i) {
        const cx vip = v(i, p);
        const cx viq = v(i, q);
        v(i, p) = c * vip - s * std::conj(phase) * viq;
        v(i, q) = s * phase * vip + c * viq;
      }
    }
  }
  return rotations;
}

}  // namespace

EigenDecomposition hermitian_eig(const ComplexMatrix& m, double tol) {
  if (!m.is_square()) throw NotSquareError("hermitian_eig: matrix is not square");
  if (!m.is_hermitian(tol))
    throw NotHermitianError("hermitian_eig: matrix is not Hermitian within tolerance");

  const int n = m.rows();
  ComplexMatrix a = m;
  // Symmetrize to kill round-off asymmetry within tolerance.
  for (int i = 0; i < n; ++i) {
    a(i, i) = cx{a(i, i).real(), 0.0};
    for (int j = i + 1; j < n; ++j) {
      const cx avg = 0.5 * (a(i, j) + std::conj(a(j, i)));
      a(i, j) = avg;
      a(j, i) = std::conj(avg);
    }
  }

  ComplexMatrix v = ComplexMatrix::identity(n);
  const double scale = std::max(1.0, a.max_abs());
  const double threshold = 1e-15 * scale;
  constexpr int kMaxSweeps = 64;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (jacobi_sweep(a, v, threshold) == 0) break;
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return a(i, i).real() > a(j, j).real(); });

  EigenDecomposition out;
  out.eigenvalues.resize(n);
  out.eigenvectors = ComplexMatrix(n, n);
  for (int j = 0; j < n; ++j) {
    out.eigenvalues[j] = a(order[j], order[j]).real();
    for (int i = 0; i < n; ++i) out.eigenvectors(i, j) = v(i, order[j]);
  }
  return out;
}

ComplexMatrix orthonormalize(const std::vector<std::vector<cx>>& vectors, double tol) {
  if (vectors.empty()) throw RankDeficientError("orthonormalize: empty vector set");
  const int dim = static_cast<int>(vectors.front().size());
  std::vector<std::vector<cx>> basis;
  basis.reserve(vectors.size());
  for (const auto& raw : vectors) {
    if (static_cast<int>(raw.size()) != dim)
      throw DimensionMismatchError("orthonormalize: mixed vector dimensions");
    const double original = vec_norm(raw);
    std::vector<cx> w = raw;
    // Two MGS passes; the second restores orthogonality lost to cancellation.
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& b : basis) {
        const cx proj = inner(b, w);
        for (int i = 0; i < dim; ++i) w[i] -= proj * b[i];
      }
    }
    const double residual = vec_norm(w);
    if (original <= 0.0 || residual < tol * std::max(1.0, original))
      throw RankDeficientError("orthonormalize: vectors are linearly dependent within tolerance");
    for (cx& x : w) x /= residual;
    basis.push_back(std::move(w));
  }
  return ComplexMatrix::from_columns(basis);
}

ComplexMatrix complete_orthonormal_basis(const std::vector<std::vector<cx>>& seed, int dim,
                                         double drop_tol) {
  std::vector<std::vector<cx>> basis;
  auto try_add = [&](std::vector<cx> w) {
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& b : basis) {
        const cx proj = inner(b, w);
        for (int i = 0; i < dim; ++i) w[i] -= proj * b[i];
      }
    }
    const double n = vec_norm(w);
    if (n < drop_tol) return;
    for (cx& x : w) x /= n;
    basis.push_back(std::move(w));
  };

  for (const auto& raw : seed) {
    if (static_cast<int>(raw.size()) != dim)
      throw DimensionMismatchError("complete_orthonormal_basis: wrong vector dimension");
    if (static_cast<int>(basis.size()) == dim) break;
    try_add(raw);
  }
  for (int k = 0; k < dim && static_cast<int>(basis.size()) < dim; ++k) {
    std::vector<cx> e(dim, cx{0.0});
    e[k] = 1.0;
    try_add(std::move(e));
  }
  if (static_cast<int>(basis.size()) != dim)
    throw RankDeficientError("complete_orthonormal_basis: could not complete basis");
  return ComplexMatrix::from_columns(basis);
}

double trace_abs_half(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionMismatchError("trace_abs_half: shape mismatch");
  if (!a.is_hermitian(tol) || !b.is_hermitian(tol))
    throw NotHermitianError("trace_abs_half: arguments must be Hermitian");
  const EigenDecomposition eig = hermitian_eig(a - b, tol);
  double sum = 0.0;
  for (double lambda : eig.eigenvalues) sum += std::abs(lambda);
  return 0.5 * sum;
}

}  // namespace zec
