#include "zec/random.hpp"

#include <cmath>
#include <numbers>

#include "zec/channel.hpp"
#include "zec/numerics.hpp"

namespace zec {

double Rng::gaussian() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double phi = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(phi);
  has_spare_ = true;
  return r * std::cos(phi);
}

ComplexMatrix random_gaussian_matrix(Rng& rng, int rows, int cols) {
  ComplexMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = rng.gaussian_complex();
  return m;
}

ComplexMatrix random_unitary(Rng& rng, int dim) {
  const ComplexMatrix g = random_gaussian_matrix(rng, dim, dim);
  std::vector<std::vector<cx>> cols;
  cols.reserve(dim);
  for (int j = 0; j < dim; ++j) cols.push_back(g.column(j));
  return orthonormalize(cols);
}

KrausChannel random_channel(Rng& rng, int dim, int kraus_count) {
  // Orthonormal columns of a (k*d) x d Gaussian matrix form an isometry;
  // its d-row blocks satisfy sum E_a^dagger E_a = I up to round-off.
  const ComplexMatrix g = random_gaussian_matrix(rng, kraus_count * dim, dim);
  std::vector<std::vector<cx>> cols;
  cols.reserve(dim);
  for (int j = 0; j < dim; ++j) cols.push_back(g.column(j));
  const ComplexMatrix isometry = orthonormalize(cols);

  std::vector<ComplexMatrix> ops;
  ops.reserve(kraus_count);
  for (int a = 0; a < kraus_count; ++a) {
    ComplexMatrix e(dim, dim);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) e(i, j) = isometry(a * dim + i, j);
    ops.push_back(std::move(e));
  }
  return validate_channel(std::move(ops));
}

DensityOperator random_density(Rng& rng, int dim, int rank) {
  const ComplexMatrix a = random_gaussian_matrix(rng, dim, rank);
  ComplexMatrix m = a * a.adjoint();
  const double tr = m.trace().real();
  m *= cx{1.0 / tr, 0.0};
  return make_density(std::move(m));
}

PureState random_pure(Rng& rng, int dim) {
  std::vector<cx> v(dim);
  for (int i = 0; i < dim; ++i) v[i] = rng.gaussian_complex();
  const double n = vec_norm(v);
  for (cx& x : v) x /= n;
  return make_pure(std::move(v));
}

}  // namespace zec
