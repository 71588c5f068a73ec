#pragma once

#include <string>
#include <vector>

#include "zec/config.hpp"
#include "zec/matrix.hpp"

namespace zec {

/// Positive unit-trace Hermitian matrix. Construct through make_density so
/// the invariants (Hermitian within tol, eigenvalues >= -tol, trace 1 within
/// tol) are checked once, at the boundary.
struct DensityOperator {
  int dim = 0;
  ComplexMatrix matrix;
};

DensityOperator make_density(ComplexMatrix m, double tol = tol::hermiticity);

/// Unit-norm state vector.
struct PureState {
  int dim = 0;
  std::vector<cx> amplitudes;
};

PureState make_pure(std::vector<cx> amplitudes, double tol = tol::unit_norm);
PureState basis_state(int dim, int k);
DensityOperator to_density(const PureState& psi);

/// Trace-preserving quantum map as a set of Kraus operators {E_a}.
struct KrausChannel {
  int dim = 0;
  std::vector<ComplexMatrix> operators;
};

/// Frobenius norm of sum_a E_a^dagger E_a - I.
double completeness_residual(const std::vector<ComplexMatrix>& ops);

/// Validates shape and the trace-preserving condition; throws
/// DimensionMismatchError or NotTracePreservingError (carrying the residual).
KrausChannel validate_channel(std::vector<ComplexMatrix> ops, double tol = tol::completeness);

enum class MeasurementKind { general_povm, projective };

/// POVM {M_j}: positive elements summing to identity. Projective kind
/// additionally requires idempotent, mutually orthogonal elements.
struct Measurement {
  int dim = 0;
  std::vector<ComplexMatrix> elements;
  MeasurementKind kind = MeasurementKind::general_povm;
};

Measurement make_measurement(std::vector<ComplexMatrix> elements, MeasurementKind kind,
                             double tol = tol::hermiticity);

/// Rank-1 projectors onto the computational basis.
Measurement computational_measurement(int dim);

/// Rank-1 projectors onto the columns of an orthonormal basis matrix.
Measurement projective_from_basis(const ComplexMatrix& basis_columns,
                                  double tol = tol::hermiticity);

/// Sums measurement elements over a partition of the outcome indices.
/// Throws NotAPartitionError if `groups` is not a partition of {0..m-1}.
Measurement coarse_grain(const Measurement& meas, const std::vector<std::vector<int>>& groups,
                         double tol = tol::hermiticity);

/// rho -> sum_a E_a rho E_a^dagger
DensityOperator apply(const KrausChannel& ch, const DensityOperator& rho);

/// p(k) = tr(E(rho) M_k) for every outcome k. Entries are clamped to zero
/// when round-off makes them slightly negative; a clamp beyond tol::clamp_limit
/// or a row sum off from 1 by more than 1e-8 raises NumericsError.
std::vector<double> transition_row(const KrausChannel& ch, const DensityOperator& rho,
                                   const Measurement& meas);

/// Projector onto the span of eigenvectors of sigma with eigenvalue > cutoff.
ComplexMatrix support_projector(const DensityOperator& sigma, double cutoff = tol::eig_cutoff);

/// Orthonormal basis of the whole space whose leading columns span the
/// supports of the channel outputs E(rho_i), completed with canonical
/// vectors. Measuring in this basis realizes every support-orthogonality
/// relation among the outputs as disjoint outcome sets.
ComplexMatrix combined_output_eigenbasis(const KrausChannel& ch,
                                         const std::vector<DensityOperator>& states,
                                         double cutoff = tol::eig_cutoff);

}  // namespace zec
