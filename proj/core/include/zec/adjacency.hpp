#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zec/channel.hpp"
#include "zec/config.hpp"
#include "zec/graph.hpp"

namespace zec {

/// Outcome indices an input can produce: j is in the set iff p(j) >= eps.
/// The full probability row is kept so borderline decisions stay auditable;
/// the capacity value is discontinuous in exactly these decisions.
struct OutcomeSet {
  std::vector<int> indices;            // sorted ascending
  std::vector<double> probabilities;   // every outcome, clamped
  double eps = tol::eps_adj;

  /// True when some included probability sits in the warning band
  /// [eps, 10*eps) — the decision is one rounding error from flipping.
  bool near_threshold() const;
};

bool disjoint(const OutcomeSet& a, const OutcomeSet& b);

OutcomeSet outcome_set(const KrausChannel& ch, const DensityOperator& rho,
                       const Measurement& meas, double eps = tol::eps_adj);

/// Set of input states under test, with display labels.
struct InputEnsemble {
  std::vector<DensityOperator> states;
  std::vector<std::string> labels;
};

InputEnsemble basis_ensemble(int dim);
InputEnsemble ensemble_from_pure(const std::vector<PureState>& states);

struct NonAdjacencyCertificate {
  bool non_adjacent = false;
  OutcomeSet first;
  OutcomeSet second;
  /// tr(P1 P2) for the two output support projectors; filled when the
  /// outcome sets are disjoint as a cross-check (it must then be < 1e-6,
  /// since disjoint outcome sets force orthogonal output subspaces).
  std::optional<double> support_overlap;
  bool near_threshold = false;
};

NonAdjacencyCertificate non_adjacent(const KrausChannel& ch, const DensityOperator& rho1,
                                     const DensityOperator& rho2, const Measurement& meas,
                                     double eps = tol::eps_adj);

/// Vertices are ensemble indices; an edge joins two inputs whose outcome
/// sets are disjoint (perfectly distinguishable pairs).
struct CharacteristicGraph {
  Graph graph;
  std::vector<std::string> labels;
  std::vector<OutcomeSet> outcome_sets;
  std::vector<std::string> warnings;
};

CharacteristicGraph characteristic_graph(const KrausChannel& ch, const InputEnsemble& ensemble,
                                         const Measurement& meas, double eps = tol::eps_adj);

/// True iff the characteristic graph has at least one edge.
bool has_positive_capacity(const KrausChannel& ch, const InputEnsemble& ensemble,
                           const Measurement& meas, double eps = tol::eps_adj);

}  // namespace zec
