#include "zec/channel.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "zec/errors.hpp"
#include "zec/numerics.hpp"

namespace zec {

DensityOperator make_density(ComplexMatrix m, double tol) {
  if (!m.is_square()) throw NotSquareError("density operator must be square");
  if (!m.is_hermitian(tol)) throw NotHermitianError("density operator must be Hermitian");
  const double tr = m.trace().real();
  if (std::abs(tr - 1.0) > tol)
    throw NumericsError("density operator trace is " + std::to_string(tr) + ", expected 1");
  const EigenDecomposition eig = hermitian_eig(m, tol);
  if (!eig.eigenvalues.empty() && eig.eigenvalues.back() < -tol)
    throw NumericsError("density operator has eigenvalue " +
                        std::to_string(eig.eigenvalues.back()) + " below the PSD floor");
  DensityOperator rho;
  rho.dim = m.rows();
  rho.matrix = std::move(m);
  return rho;
}

PureState make_pure(std::vector<cx> amplitudes, double tol) {
  const double n = vec_norm(amplitudes);
  if (std::abs(n - 1.0) > tol)
    throw NumericsError("pure state norm is " + std::to_string(n) + ", expected 1");
  PureState psi;
  psi.dim = static_cast<int>(amplitudes.size());
  psi.amplitudes = std::move(amplitudes);
  return psi;
}

PureState basis_state(int dim, int k) {
  std::vector<cx> v(dim, cx{0.0});
  v[k] = 1.0;
  PureState psi;
  psi.dim = dim;
  psi.amplitudes = std::move(v);
  return psi;
}

DensityOperator to_density(const PureState& psi) {
  DensityOperator rho;
  rho.dim = psi.dim;
  rho.matrix = ComplexMatrix::outer(psi.amplitudes, psi.amplitudes);
  return rho;
}

double completeness_residual(const std::vector<ComplexMatrix>& ops) {
  const int d = ops.front().rows();
  ComplexMatrix sum(d, d);
  for (const ComplexMatrix& e : ops) sum += e.adjoint() * e;
  sum -= ComplexMatrix::identity(d);
  return sum.frobenius_norm();
}

KrausChannel validate_channel(std::vector<ComplexMatrix> ops, double tol) {
  if (ops.empty()) throw DimensionMismatchError("channel needs at least one Kraus operator");
  const int d = ops.front().rows();
  for (const ComplexMatrix& e : ops)
    if (!e.is_square() || e.rows() != d)
      throw DimensionMismatchError("Kraus operators must all be square with one dimension");
  const double residual = completeness_residual(ops);
  if (residual > tol)
    throw NotTracePreservingError(
        "sum E_a^dagger E_a differs from identity (Frobenius residual " +
            std::to_string(residual) + ")",
        residual);
  KrausChannel ch;
  ch.dim = d;
  ch.operators = std::move(ops);
  return ch;
}

Measurement make_measurement(std::vector<ComplexMatrix> elements, MeasurementKind kind,
                             double tol) {
  if (elements.empty()) throw DimensionMismatchError("measurement needs at least one element");
  const int d = elements.front().rows();
  ComplexMatrix sum(d, d);
  for (const ComplexMatrix& m : elements) {
    if (!m.is_square() || m.rows() != d)
      throw DimensionMismatchError("measurement elements must all be square with one dimension");
    if (!m.is_hermitian(tol)) throw NotHermitianError("measurement element is not Hermitian");
    const EigenDecomposition eig = hermitian_eig(m, tol);
    if (!eig.eigenvalues.empty() && eig.eigenvalues.back() < -tol)
      throw NumericsError("measurement element is not positive semidefinite");
    sum += m;
  }
  if (!sum.approx_equal(ComplexMatrix::identity(d), tol))
    throw NumericsError("measurement elements do not sum to identity");

  if (kind == MeasurementKind::projective) {
    for (size_t j = 0; j < elements.size(); ++j) {
      if (!(elements[j] * elements[j]).approx_equal(elements[j], tol))
        throw NumericsError("projective measurement element " + std::to_string(j) +
                            " is not idempotent");
      for (size_t k = j + 1; k < elements.size(); ++k) {
        if ((elements[j] * elements[k]).max_abs() > tol)
          throw NumericsError("projective measurement elements " + std::to_string(j) + " and " +
                              std::to_string(k) + " are not orthogonal");
      }
    }
  }

  Measurement meas;
  meas.dim = d;
  meas.elements = std::move(elements);
  meas.kind = kind;
  return meas;
}

Measurement computational_measurement(int dim) {
  std::vector<ComplexMatrix> elems;
  elems.reserve(dim);
  for (int k = 0; k < dim; ++k) {
    ComplexMatrix p(dim, dim);
    p(k, k) = 1.0;
    elems.push_back(std::move(p));
  }
  return make_measurement(std::move(elems), MeasurementKind::projective);
}

Measurement projective_from_basis(const ComplexMatrix& basis_columns, double tol) {
  if (!basis_columns.is_square())
    throw DimensionMismatchError("projective_from_basis expects a full square basis");
  std::vector<ComplexMatrix> elems;
  elems.reserve(basis_columns.cols());
  for (int j = 0; j < basis_columns.cols(); ++j) {
    const std::vector<cx> col = basis_columns.column(j);
    elems.push_back(ComplexMatrix::outer(col, col));
  }
  return make_measurement(std::move(elems), MeasurementKind::projective, tol);
}

Measurement coarse_grain(const Measurement& meas, const std::vector<std::vector<int>>& groups,
                         double tol) {
  const int m = static_cast<int>(meas.elements.size());
  std::vector<int> seen(m, 0);
  for (const auto& g : groups)
    for (int j : g) {
      if (j < 0 || j >= m) throw NotAPartitionError("group index out of range");
      ++seen[j];
    }
  for (int j = 0; j < m; ++j)
    if (seen[j] != 1)
      throw NotAPartitionError("groups must cover every outcome index exactly once");

  std::vector<ComplexMatrix> elems;
  elems.reserve(groups.size());
  for (const auto& g : groups) {
    ComplexMatrix sum(meas.dim, meas.dim);
    for (int j : g) sum += meas.elements[j];
    elems.push_back(std::move(sum));
  }
  // Grouping orthogonal projectors yields projectors again; re-validate
  // rather than assume.
  return make_measurement(std::move(elems), meas.kind, tol);
}

DensityOperator apply(const KrausChannel& ch, const DensityOperator& rho) {
  if (ch.dim != rho.dim) throw DimensionMismatchError("channel/state dimension mismatch");
  ComplexMatrix out(ch.dim, ch.dim);
  for (const ComplexMatrix& e : ch.operators) out += e * rho.matrix * e.adjoint();
  return make_density(std::move(out));
}

std::vector<double> transition_row(const KrausChannel& ch, const DensityOperator& rho,
                                   const Measurement& meas) {
  if (ch.dim != rho.dim || ch.dim != meas.dim)
    throw DimensionMismatchError("channel/state/measurement dimension mismatch");
  const DensityOperator sigma = apply(ch, rho);
  std::vector<double> row(meas.elements.size());
  for (size_t k = 0; k < meas.elements.size(); ++k) {
    const ComplexMatrix& mk = meas.elements[k];
    cx tr = 0.0;
    for (int i = 0; i < ch.dim; ++i)
      for (int j = 0; j < ch.dim; ++j) tr += sigma.matrix(i, j) * mk(j, i);
    double p = tr.real();
    if (p < 0.0) {
      if (p < -tol::clamp_limit)
        throw NumericsError("outcome probability " + std::to_string(p) +
                            " is negative beyond the clamp limit");
      p = 0.0;
    }
    row[k] = p;
  }
  const double sum = std::accumulate(row.begin(), row.end(), 0.0);
  if (std::abs(sum - 1.0) > 1e-8)
    throw NumericsError("transition row sums to " + std::to_string(sum) + ", expected 1");
  return row;
}

ComplexMatrix support_projector(const DensityOperator& sigma, double cutoff) {
  const EigenDecomposition eig = hermitian_eig(sigma.matrix);
  ComplexMatrix p(sigma.dim, sigma.dim);
  for (int j = 0; j < sigma.dim; ++j) {
    if (eig.eigenvalues[j] <= cutoff) continue;
    const std::vector<cx> v = eig.eigenvectors.column(j);
    p += ComplexMatrix::outer(v, v);
  }
  return p;
}

ComplexMatrix combined_output_eigenbasis(const KrausChannel& ch,
                                         const std::vector<DensityOperator>& states,
                                         double cutoff) {
  std::vector<std::vector<cx>> seed;
  for (const DensityOperator& rho : states) {
    const DensityOperator sigma = apply(ch, rho);
    const EigenDecomposition eig = hermitian_eig(sigma.matrix);
    for (int j = 0; j < sigma.dim; ++j)
      if (eig.eigenvalues[j] > cutoff) seed.push_back(eig.eigenvectors.column(j));
  }
  return complete_orthonormal_basis(seed, ch.dim);
}

}  // namespace zec
