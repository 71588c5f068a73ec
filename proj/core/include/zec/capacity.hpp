#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zec/adjacency.hpp"
#include "zec/graph.hpp"

namespace zec {

struct RateEntry {
  int n = 1;
  long long clique = 1;     // K(n) = omega of the n-fold disjunctive power
  double rate_bits = 0.0;   // log2(K(n)) / n
  bool exact = true;
};

/// Achievable zero-error rates over block lengths, with the witness code at
/// the best computed length and an optional theta upper bound. All rates in
/// bits per channel use.
struct RateReport {
  std::vector<RateEntry> table;
  int best_n = 1;
  double best_rate_bits = 0.0;
  std::vector<std::vector<int>> witness;  // tuples of ensemble indices
  bool witness_verified = false;

  CharacteristicGraph characteristic;

  std::optional<double> theta;            // theta of the confusability graph
  std::optional<double> theta_rate_bits;  // log2(theta)
  std::vector<std::string> warnings;
};

/// Clique numbers of the disjunctive powers of the characteristic graph for
/// n = 1..max_n. The witness realizes K(n*) at the best rate (smallest such
/// n on ties) and is re-verified pairwise through tensor-product outcome
/// sets before being reported.
RateReport zero_error_rate(const KrausChannel& ch, const InputEnsemble& ensemble,
                           const Measurement& meas, int max_n, double eps = tol::eps_adj,
                           const CliqueOptions& clique_options = {}, int vertex_cap = 10000);

/// Witness decoded to state-label tuples.
std::vector<std::vector<std::string>> witness_code(const RateReport& report);

struct ThetaOptions {
  double tol = tol::theta;
  int max_iterations = 50000;
  int vertex_cap = 64;
};

/// Lovasz theta of a graph. For rate bounds, pass the CONFUSABILITY graph
/// (complement of the characteristic graph); log2(theta) then upper-bounds
/// every achievable rate.
///
/// Solves max <J, X> s.t. tr X = 1, X_ij = 0 on edges, X PSD by alternating
/// projections onto the affine set and the PSD cone with a running dual
/// correction (ADMM form, which Dykstra's scheme is the projection special
/// case of). Throws NonConvergenceError with the residual if the iteration
/// cap is hit.
double lovasz_theta(const Graph& g, const ThetaOptions& options = {});

/// Computes theta of complement(report.characteristic.graph) and stores both
/// the value and the resulting rate bound in the report.
void attach_theta_bound(RateReport& report, const ThetaOptions& options = {});

}  // namespace zec
