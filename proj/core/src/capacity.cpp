#include "zec/capacity.hpp"

#include <cmath>
#include <string>

#include "zec/errors.hpp"

namespace zec {

namespace {

// Tuples are distinguishable iff some coordinate pair has disjoint outcome
// sets; re-derives pairwise distinguishability from the outcome sets alone,
// independently of the product-graph edges the clique search used.
bool verify_witness(const std::vector<std::vector<int>>& witness,
                    const std::vector<OutcomeSet>& sets) {
  for (size_t a = 0; a < witness.size(); ++a) {
    for (size_t b = a + 1; b < witness.size(); ++b) {
      bool distinguishable = false;
      for (size_t t = 0; t < witness[a].size() && !distinguishable; ++t)
        distinguishable = disjoint(sets[witness[a][t]], sets[witness[b][t]]);
      if (!distinguishable) return false;
    }
  }
  return true;
}

}  // namespace

RateReport zero_error_rate(const KrausChannel& ch, const InputEnsemble& ensemble,
                           const Measurement& meas, int max_n, double eps,
                           const CliqueOptions& clique_options, int vertex_cap) {
  if (max_n < 1) throw SizeCapExceededError("zero_error_rate: max_n must be >= 1");

  RateReport report;
  report.characteristic = characteristic_graph(ch, ensemble, meas, eps);
  report.warnings = report.characteristic.warnings;

  int best_n = 1;
  double best_rate = -1.0;
  std::vector<int> best_witness_flat;
  int best_base = report.characteristic.graph.vertex_count();

  for (int n = 1; n <= max_n; ++n) {
    const ProductGraph power = disjunctive_power(report.characteristic.graph, n, vertex_cap);
    const CliqueResult clique = clique_number(power.graph, clique_options);
    RateEntry entry;
    entry.n = n;
    entry.clique = clique.size;
    entry.rate_bits = std::log2(static_cast<double>(clique.size)) / n;
    entry.exact = clique.exact;
    if (!clique.exact)
      report.warnings.push_back("clique search at n=" + std::to_string(n) +
                                " exhausted its budget; K(" + std::to_string(n) +
                                ") is a lower bound");
    report.table.push_back(entry);
    if (entry.rate_bits > best_rate + 1e-12) {
      best_rate = entry.rate_bits;
      best_n = n;
      best_witness_flat = clique.witness;
      best_base = power.base_vertices;
    }
  }

  report.best_n = best_n;
  report.best_rate_bits = best_rate;
  for (int vertex : best_witness_flat) {
    std::vector<int> tuple(best_n);
    int v = vertex;
    for (int t = best_n - 1; t >= 0; --t) {
      tuple[t] = v % best_base;
      v /= best_base;
    }
    report.witness.push_back(std::move(tuple));
  }
  report.witness_verified = verify_witness(report.witness, report.characteristic.outcome_sets);
  if (!report.witness_verified)
    report.warnings.push_back("witness code failed outcome-set re-verification");
  return report;
}

std::vector<std::vector<std::string>> witness_code(const RateReport& report) {
  std::vector<std::vector<std::string>> code;
  code.reserve(report.witness.size());
  for (const std::vector<int>& tuple : report.witness) {
    std::vector<std::string> labels;
    labels.reserve(tuple.size());
    for (int idx : tuple) labels.push_back(report.characteristic.labels[idx]);
    code.push_back(std::move(labels));
  }
  return code;
}

void attach_theta_bound(RateReport& report, const ThetaOptions& options) {
  const Graph confusability = complement(report.characteristic.graph);
  const double theta = lovasz_theta(confusability, options);
  report.theta = theta;
  report.theta_rate_bits = std::log2(theta);
}

}  // namespace zec
