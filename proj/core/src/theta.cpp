#include <cmath>
#include <string>
#include <vector>

#include "zec/capacity.hpp"
#include "zec/errors.hpp"

namespace zec {

namespace {

// Dense symmetric matrices as flat row-major doubles; n stays <= 64 here.
using Sym = std::vector<double>;

double dot_all(const Sym& x) {
  double s = 0.0;
  for (double v : x) s += v;
  return s;
}

double frob_dist(const Sym& a, const Sym& b) {
  double s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return std::sqrt(s);
}

// Plain cyclic Jacobi for real symmetric matrices; reused every iteration,
// and cheap at these sizes.
void sym_eig(const Sym& m, int n, std::vector<double>& values, Sym& vectors) {
  Sym a = m;
  vectors.assign(static_cast<size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) vectors[static_cast<size_t>(i) * n + i] = 1.0;

  double scale = 0.0;
  for (double v : a) scale = std::max(scale, std::abs(v));
  const double threshold = 1e-14 * std::max(1.0, scale);

  for (int sweep = 0; sweep < 64; ++sweep) {
    int rotations = 0;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a[static_cast<size_t>(p) * n + q];
        if (std::abs(apq) <= threshold) continue;
        ++rotations;
        const double app = a[static_cast<size_t>(p) * n + p];
        const double aqq = a[static_cast<size_t>(q) * n + q];
        const double tau = (aqq - app) / (2.0 * apq);
        const double t = (tau >= 0.0) ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                      : -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        for (int i = 0; i < n; ++i) {
          const double aip = a[static_cast<size_t>(i) * n + p];
          const double aiq = a[static_cast<size_t>(i) * n + q];
          a[static_cast<size_t>(i) * n + p] = c * aip - s * aiq;
          a[static_cast<size_t>(i) * n + q] = s * aip + c * aiq;
        }
        for (int j = 0; j < n; ++j) {
          const double apj = a[static_cast<size_t>(p) * n + j];
          const double aqj = a[static_cast<size_t>(q) * n + j];
          a[static_cast<size_t>(p) * n + j] = c * apj - s * aqj;
          a[static_cast<size_t>(q) * n + j] = s * apj + c * aqj;
        }
        a[static_cast<size_t>(p) * n + q] = 0.0;
        a[static_cast<size_t>(q) * n + p] = 0.0;
        for (int i = 0; i < n; ++i) {
          const double vip = vectors[static_cast<size_t>(i) * n + p];
          const double viq = vectors[static_cast<size_t>(i) * n + q];
          vectors[static_cast<size_t>(i) * n + p] = c * vip - s * viq;
          vectors[static_cast<size_t>(i) * n + q] = s * vip + c * viq;
        }
      }
    }
    if (rotations == 0) break;
  }
  values.resize(n);
  for (int i = 0; i < n; ++i) values[i] = a[static_cast<size_t>(i) * n + i];
}

// Projection onto {X : X_ij = 0 on edges, tr X = 1}. The two constraint
// blocks touch disjoint entries, so the projection is exact in one pass.
void project_affine(Sym& x, int n, const std::vector<std::pair<int, int>>& edges) {
  for (auto [i, j] : edges) {
    x[static_cast<size_t>(i) * n + j] = 0.0;
    x[static_cast<size_t>(j) * n + i] = 0.0;
  }
  double tr = 0.0;
  for (int i = 0; i < n; ++i) tr += x[static_cast<size_t>(i) * n + i];
  const double shift = (1.0 - tr) / n;
  for (int i = 0; i < n; ++i) x[static_cast<size_t>(i) * n + i] += shift;
}

void project_psd(Sym& x, int n, std::vector<double>& values, Sym& vectors) {
  sym_eig(x, n, values, vectors);
  std::fill(x.begin(), x.end(), 0.0);
  for (int k = 0; k < n; ++k) {
    const double lambda = values[k];
    if (lambda <= 0.0) continue;
    for (int i = 0; i < n; ++i) {
      const double vik = vectors[static_cast<size_t>(i) * n + k];
      if (vik == 0.0) continue;
      for (int j = 0; j < n; ++j)
        x[static_cast<size_t>(i) * n + j] += lambda * vik * vectors[static_cast<size_t>(j) * n + k];
    }
  }
}

}  // namespace

double lovasz_theta(const Graph& g, const ThetaOptions& options) {
  const int n = g.vertex_count();
  if (n < 1) throw SizeCapExceededError("lovasz_theta: graph must have at least one vertex");
  if (n > options.vertex_cap)
    throw SizeCapExceededError("lovasz_theta: graph has " + std::to_string(n) +
                               " vertices, cap is " + std::to_string(options.vertex_cap));
  if (n == 1) return 1.0;

  const std::vector<std::pair<int, int>> edges = g.edges();
  const size_t nn = static_cast<size_t>(n) * n;

  // X lives on the affine side, Y on the PSD cone, U is the scaled dual.
  Sym x(nn, 0.0), y(nn, 0.0), u(nn, 0.0), y_prev(nn, 0.0), work(nn, 0.0);
  for (int i = 0; i < n; ++i) {
    x[static_cast<size_t>(i) * n + i] = 1.0 / n;
    y[static_cast<size_t>(i) * n + i] = 1.0 / n;
  }

  double rho = 1.0;
  const double relax = 1.6;
  const double residual_target = std::min(1e-6, options.tol * 0.1);
  std::vector<double> eig_values;
  Sym eig_vectors;

  double primal_res = 0.0, dual_res = 0.0;
  for (int iter = 0; iter < options.max_iterations; ++iter) {
    // X step carries the objective: project (Y - U + J/rho) onto the affine set.
    for (size_t k = 0; k < nn; ++k) x[k] = y[k] - u[k] + 1.0 / rho;
    project_affine(x, n, edges);

    y_prev = y;
    for (size_t k = 0; k < nn; ++k) {
      const double xh = relax * x[k] + (1.0 - relax) * y[k];
      work[k] = xh + u[k];
      u[k] += xh;  // partial update; subtract new Y below
    }
    y = work;
    project_psd(y, n, eig_values, eig_vectors);
    for (size_t k = 0; k < nn; ++k) u[k] -= y[k];

    primal_res = frob_dist(x, y);
    dual_res = rho * frob_dist(y, y_prev);
    if (std::max(primal_res, dual_res) < residual_target) return dot_all(x);

    // Residual balancing keeps the two projection sequences in step; the
    // scaled dual must be rescaled whenever rho changes.
    if (iter % 50 == 49) {
      if (primal_res > 10.0 * dual_res) {
        rho *= 2.0;
        for (double& v : u) v *= 0.5;
      } else if (dual_res > 10.0 * primal_res) {
        rho *= 0.5;
        for (double& v : u) v *= 2.0;
      }
    }
  }
  throw NonConvergenceError("lovasz_theta: residual " +
                                std::to_string(std::max(primal_res, dual_res)) + " after " +
                                std::to_string(options.max_iterations) + " iterations",
                            std::max(primal_res, dual_res));
}

}  // namespace zec
