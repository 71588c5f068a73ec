#pragma once

namespace zec {

// Default tolerances. Every operation that makes a tolerance-sensitive
// decision takes the tolerance as a parameter; these are the defaults.
namespace tol {

/// Entrywise bound on |M - M^dagger| for Hermiticity checks.
inline constexpr double hermiticity = 1e-8;

/// Frobenius bound on |sum E_a^dagger E_a - I| for trace preservation.
inline constexpr double completeness = 1e-8;

/// Eigenvalue floor for positive-semidefiniteness checks.
inline constexpr double psd_floor = 1e-8;

/// An outcome counts as "zero probability" iff p < eps_adj.
inline constexpr double eps_adj = 1e-7;

/// Eigenvalue cutoff when deciding the support of a density operator.
/// Deliberately decoupled from eps_adj: support-rank decisions and
/// probability decisions fail in different ways.
inline constexpr double eig_cutoff = 1e-7;

/// Target accuracy for the Lovasz theta solver.
inline constexpr double theta = 1e-5;

/// Probabilities below zero by more than this are errors, not round-off.
inline constexpr double clamp_limit = 1e-6;

/// Unit-norm tolerance for pure-state amplitudes.
inline constexpr double unit_norm = 1e-9;

}  // namespace tol

/// Run-time adjustable tolerances (config file / CLI flags).
struct Tolerances {
  double eps_adj = tol::eps_adj;
  double eig_cutoff = tol::eig_cutoff;
  double theta_tol = tol::theta;
};

}  // namespace zec
