#pragma once

#include <cstdint>
#include <random>

#include "zec/matrix.hpp"

namespace zec {

struct KrausChannel;
struct DensityOperator;
struct PureState;

/// Seeded random source. Gaussians come from a hand-rolled Box-Muller over
/// the raw 64-bit stream so that a fixed seed replays identically on every
/// platform (std::normal_distribution is implementation-defined).
class Rng {
public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  /// Uniform in (0, 1].
  double uniform() { return (static_cast<double>(gen_() >> 11) + 1.0) * 0x1p-53; }

  double gaussian();
  cx gaussian_complex() { return {gaussian(), gaussian()}; }

  /// Uniform integer in [0, n).
  int below(int n) { return static_cast<int>(gen_() % static_cast<std::uint64_t>(n)); }

private:
  std::mt19937_64 gen_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

ComplexMatrix random_gaussian_matrix(Rng& rng, int rows, int cols);

/// Haar-distributed unitary via QR of a Gaussian matrix.
ComplexMatrix random_unitary(Rng& rng, int dim);

/// Random channel with exact completeness by construction: QR-orthonormalize
/// a (kraus_count*dim) x dim Gaussian block column into an isometry and carve
/// it into kraus_count operators.
KrausChannel random_channel(Rng& rng, int dim, int kraus_count);

DensityOperator random_density(Rng& rng, int dim, int rank);

PureState random_pure(Rng& rng, int dim);

}  // namespace zec
