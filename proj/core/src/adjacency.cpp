#include "zec/adjacency.hpp"

#include <algorithm>

#include "zec/errors.hpp"
#include "zec/parallel.hpp"

namespace zec {

bool OutcomeSet::near_threshold() const {
  for (int j : indices)
    if (probabilities[j] < 10.0 * eps) return true;
  return false;
}

bool disjoint(const OutcomeSet& a, const OutcomeSet& b) {
  auto ia = a.indices.begin();
  auto ib = b.indices.begin();
  while (ia != a.indices.end() && ib != b.indices.end()) {
    if (*ia == *ib) return false;
    if (*ia < *ib)
      ++ia;
    else
      ++ib;
  }
  return true;
}

OutcomeSet outcome_set(const KrausChannel& ch, const DensityOperator& rho,
                       const Measurement& meas, double eps) {
  if (eps <= 0.0) throw NumericsError("outcome_set: eps must be positive");
  OutcomeSet set;
  set.eps = eps;
  set.probabilities = transition_row(ch, rho, meas);
  for (int j = 0; j < static_cast<int>(set.probabilities.size()); ++j)
    if (set.probabilities[j] >= eps) set.indices.push_back(j);
  return set;
}

InputEnsemble basis_ensemble(int dim) {
  InputEnsemble ensemble;
  for (int k = 0; k < dim; ++k) {
    ensemble.states.push_back(to_density(basis_state(dim, k)));
    ensemble.labels.push_back("v" + std::to_string(k + 1));
  }
  return ensemble;
}

InputEnsemble ensemble_from_pure(const std::vector<PureState>& states) {
  InputEnsemble ensemble;
  for (size_t k = 0; k < states.size(); ++k) {
    ensemble.states.push_back(to_density(states[k]));
    ensemble.labels.push_back("s" + std::to_string(k + 1));
  }
  return ensemble;
}

NonAdjacencyCertificate non_adjacent(const KrausChannel& ch, const DensityOperator& rho1,
                                     const DensityOperator& rho2, const Measurement& meas,
                                     double eps) {
  NonAdjacencyCertificate cert;
  cert.first = outcome_set(ch, rho1, meas, eps);
  cert.second = outcome_set(ch, rho2, meas, eps);
  cert.non_adjacent = disjoint(cert.first, cert.second);
  cert.near_threshold = cert.first.near_threshold() || cert.second.near_threshold();
  if (cert.non_adjacent) {
    // Disjoint outcome sets imply the channel sends the two inputs into
    // orthogonal subspaces; record the projector overlap as the certificate.
    const ComplexMatrix p1 = support_projector(apply(ch, rho1));
    const ComplexMatrix p2 = support_projector(apply(ch, rho2));
    cert.support_overlap = (p1 * p2).trace().real();
  }
  return cert;
}

CharacteristicGraph characteristic_graph(const KrausChannel& ch, const InputEnsemble& ensemble,
                                         const Measurement& meas, double eps) {
  if (ensemble.states.empty()) throw DimensionMismatchError("ensemble must be non-empty");
  const int l = static_cast<int>(ensemble.states.size());

  CharacteristicGraph result;
  result.labels = ensemble.labels;
  result.outcome_sets.resize(l);
  parallel_for(l, [&](size_t i) {
    result.outcome_sets[i] = outcome_set(ch, ensemble.states[i], meas, eps);
  });

  result.graph = Graph(l);
  for (int i = 0; i < l; ++i)
    for (int k = i + 1; k < l; ++k)
      if (disjoint(result.outcome_sets[i], result.outcome_sets[k])) result.graph.add_edge(i, k);

  for (int i = 0; i < l; ++i)
    if (result.outcome_sets[i].near_threshold())
      result.warnings.push_back("outcome set of " + result.labels[i] +
                                " has probabilities within 10x of eps=" + std::to_string(eps) +
                                "; adjacency decisions may be borderline");
  return result;
}

bool has_positive_capacity(const KrausChannel& ch, const InputEnsemble& ensemble,
                           const Measurement& meas, double eps) {
  return characteristic_graph(ch, ensemble, meas, eps).graph.edge_count() > 0;
}

}  // namespace zec
