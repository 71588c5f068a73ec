#include "zec/standard_channels.hpp"

#include <cmath>

#include "zec/errors.hpp"

namespace zec {

KrausChannel identity_channel(int dim) {
  return validate_channel({ComplexMatrix::identity(dim)});
}

KrausChannel completely_mixing_channel(int dim) {
  std::vector<ComplexMatrix> ops;
  ops.reserve(static_cast<size_t>(dim) * dim);
  const double s = 1.0 / std::sqrt(static_cast<double>(dim));
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      ComplexMatrix e(dim, dim);
      e(i, j) = s;
      ops.push_back(std::move(e));
    }
  return validate_channel(std::move(ops));
}

KrausChannel pentagon_channel(double alpha, double beta) {
  if (!(alpha > 0.0 && alpha < 0.5) || !(beta > 0.0 && beta < 0.5))
    throw ParameterOutOfRangeError("pentagon channel requires 0 < alpha, beta < 0.5");

  const double a = alpha;
  const double b = beta;
  ComplexMatrix e1 = ComplexMatrix::from_rows({
      {a, 0, 0, 0, b},
      {a, b, 0, 0, 0},
      {0, a, b, 0, 0},
      {0, 0, a, b, 0},
      {0, 0, 0, a, b},
  });
  ComplexMatrix e2 = ComplexMatrix::from_rows({
      {a, 0, 0, 0, -b},
      {a, -b, 0, 0, 0},
      {0, a, -b, 0, 0},
      {0, 0, a, -b, 0},
      {0, 0, 0, a, -b},
  });
  const double mid = std::sqrt(1.0 - 2.0 * a * a - 2.0 * b * b);
  ComplexMatrix e3 = ComplexMatrix::from_rows({
      {std::sqrt(1.0 - 4.0 * a * a), 0, 0, 0, 0},
      {0, mid, 0, 0, 0},
      {0, 0, mid, 0, 0},
      {0, 0, 0, mid, 0},
      {0, 0, 0, 0, std::sqrt(1.0 - 4.0 * b * b)},
  });
  return validate_channel({std::move(e1), std::move(e2), std::move(e3)});
}

}  // namespace zec
