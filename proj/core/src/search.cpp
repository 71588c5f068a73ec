#include "zec/search.hpp"

#include <cmath>
#include <utility>

#include "zec/errors.hpp"
#include "zec/numerics.hpp"
#include "zec/parallel.hpp"
#include "zec/random.hpp"

namespace zec {

StrategyKind strategy_from_name(const std::string& name) {
  if (name == "canonical") return StrategyKind::canonical;
  if (name == "output-eigenbasis") return StrategyKind::output_eigenbasis;
  if (name == "random-basis") return StrategyKind::random_basis;
  if (name == "refine") return StrategyKind::refine;
  if (name == "all") return StrategyKind::all;
  throw ParameterOutOfRangeError("unknown strategy '" + name + "'");
}

std::string strategy_name(StrategyKind kind) {
  switch (kind) {
    case StrategyKind::canonical: return "canonical";
    case StrategyKind::output_eigenbasis: return "output-eigenbasis";
    case StrategyKind::random_basis: return "random-basis";
    case StrategyKind::refine: return "refine";
    case StrategyKind::all: return "all";
  }
  return "?";
}

namespace {

InputEnsemble ensemble_from_basis_columns(const ComplexMatrix& basis, const std::string& prefix) {
  InputEnsemble ensemble;
  for (int j = 0; j < basis.cols(); ++j) {
    const std::vector<cx> col = basis.column(j);
    ensemble.states.push_back(to_density(make_pure(col)));
    ensemble.labels.push_back(prefix + std::to_string(j + 1));
  }
  return ensemble;
}

Candidate canonical_candidate(const KrausChannel& ch) {
  Candidate cand;
  cand.states = basis_ensemble(ch.dim);
  cand.measurement = computational_measurement(ch.dim);
  cand.description = "canonical";
  return cand;
}

Candidate output_eigenbasis_candidate(const KrausChannel& ch) {
  Candidate cand;
  cand.states = basis_ensemble(ch.dim);
  cand.measurement =
      projective_from_basis(combined_output_eigenbasis(ch, cand.states.states));
  cand.description = "output-eigenbasis";
  return cand;
}

Candidate random_candidate(const KrausChannel& ch, Rng& rng, int index) {
  Candidate cand;
  const ComplexMatrix basis = random_unitary(rng, ch.dim);
  cand.states = ensemble_from_basis_columns(basis, "s");
  cand.measurement =
      projective_from_basis(combined_output_eigenbasis(ch, cand.states.states));
  cand.description = "random-basis#" + std::to_string(index + 1);
  return cand;
}

// e^{i theta H} by scaling-and-squaring on the truncated series; H is a
// random Hermitian direction, theta stays <= 0.05.
ComplexMatrix small_unitary_rotation(Rng& rng, int dim, double theta) {
  ComplexMatrix h = random_gaussian_matrix(rng, dim, dim);
  h += h.adjoint();
  h *= cx{0.5, 0.0};
  ComplexMatrix a = h;
  a *= cx{0.0, theta / 16.0};
  ComplexMatrix u = ComplexMatrix::identity(dim);
  ComplexMatrix term = ComplexMatrix::identity(dim);
  for (int k = 1; k <= 8; ++k) {
    term = term * a;
    term *= cx{1.0 / k, 0.0};
    u += term;
  }
  for (int s = 0; s < 4; ++s) u = u * u;
  // A final polish keeps the columns orthonormal to working precision.
  std::vector<std::vector<cx>> cols;
  for (int j = 0; j < dim; ++j) cols.push_back(u.column(j));
  return orthonormalize(cols);
}

Candidate perturbed_candidate(const KrausChannel& ch, const Candidate& incumbent, Rng& rng,
                              double theta, int index) {
  Candidate cand;
  const ComplexMatrix rotation = small_unitary_rotation(rng, ch.dim, theta);
  std::vector<std::vector<cx>> cols;
  for (const DensityOperator& rho : incumbent.states.states) {
    // Incumbent states are pure by construction; rotate their top eigenvector.
    const EigenDecomposition eig = hermitian_eig(rho.matrix);
    cols.push_back(rotation.apply(eig.eigenvectors.column(0)));
  }
  const ComplexMatrix basis = orthonormalize(cols);
  cand.states = ensemble_from_basis_columns(basis, "s");
  cand.measurement =
      projective_from_basis(combined_output_eigenbasis(ch, cand.states.states));
  cand.description = "refine#" + std::to_string(index + 1);
  return cand;
}

struct Evaluation {
  RateReport report;
  CandidateOutcome outcome;
};

Evaluation evaluate(const KrausChannel& ch, const Candidate& cand,
                    const SearchStrategy& strategy) {
  Evaluation ev;
  ev.report = zero_error_rate(ch, cand.states, cand.measurement, strategy.max_n, strategy.eps);
  ev.outcome.description = cand.description;
  ev.outcome.best_rate_bits = ev.report.best_rate_bits;
  ev.outcome.exact = true;
  for (const RateEntry& entry : ev.report.table) {
    ev.outcome.cliques.push_back(entry.clique);
    ev.outcome.exact = ev.outcome.exact && entry.exact;
  }
  return ev;
}

}  // namespace

std::vector<Candidate> candidate_pairs(const KrausChannel& ch, const SearchStrategy& strategy) {
  std::vector<Candidate> out;
  const StrategyKind kind = strategy.kind;
  const bool all = kind == StrategyKind::all;
  if (all || kind == StrategyKind::canonical || kind == StrategyKind::refine)
    out.push_back(canonical_candidate(ch));
  if (all || kind == StrategyKind::output_eigenbasis || kind == StrategyKind::refine)
    out.push_back(output_eigenbasis_candidate(ch));
  if (all || kind == StrategyKind::random_basis) {
    Rng rng(strategy.seed);
    for (int t = 0; t < strategy.trials; ++t) out.push_back(random_candidate(ch, rng, t));
  }
  return out;
}

SearchResult search_optimum(const KrausChannel& ch, const SearchStrategy& strategy) {
  const std::vector<Candidate> candidates = candidate_pairs(ch, strategy);

  std::vector<Evaluation> evaluations(candidates.size());
  parallel_for(candidates.size(),
               [&](size_t i) { evaluations[i] = evaluate(ch, candidates[i], strategy); });

  SearchResult result;
  size_t best_index = 0;
  for (size_t i = 0; i < evaluations.size(); ++i) {
    result.log.push_back(evaluations[i].outcome);
    if (evaluations[i].report.best_rate_bits >
        evaluations[best_index].report.best_rate_bits + 1e-12)
      best_index = i;
  }
  result.best = candidates[best_index];
  result.report = evaluations[best_index].report;

  if (strategy.kind == StrategyKind::refine || strategy.kind == StrategyKind::all) {
    // Greedy local improvement of the incumbent; a fresh stream keeps the
    // rotation sequence independent of how many random candidates ran.
    Rng rng(strategy.seed ^ 0x9e3779b97f4a7c15ull);
    for (int round = 0; round < strategy.trials; ++round) {
      const double theta = (round % 2 == 0) ? 0.05 : 0.01;
      Candidate cand = perturbed_candidate(ch, result.best, rng, theta, round);
      Evaluation ev = evaluate(ch, cand, strategy);
      result.log.push_back(ev.outcome);
      if (ev.report.best_rate_bits > result.report.best_rate_bits + 1e-12) {
        result.best = std::move(cand);
        result.report = std::move(ev.report);
      }
    }
  }
  return result;
}

}  // namespace zec
