#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zec/capacity.hpp"
#include "zec/channel.hpp"

namespace zec {

enum class StrategyKind { canonical, output_eigenbasis, random_basis, refine, all };

StrategyKind strategy_from_name(const std::string& name);
std::string strategy_name(StrategyKind kind);

/// Candidate generation is restricted to what provably suffices: orthonormal
/// pure-state ensembles and projective measurements. Results are incumbents
/// (achievable-rate lower bounds), not certified optima, unless the theta
/// bound meets them.
struct SearchStrategy {
  StrategyKind kind = StrategyKind::canonical;
  int trials = 1;          // random-basis candidates / refinement rounds
  std::uint64_t seed = 0;  // fixed seed => replay-identical runs
  int max_n = 2;
  double eps = tol::eps_adj;
};

struct Candidate {
  InputEnsemble states;
  Measurement measurement;
  std::string description;
};

/// Deterministic candidate stream for the non-adaptive strategy kinds:
///   canonical         computational basis states and projectors
///   output-eigenbasis basis states measured in the combined eigenbasis of
///                     their channel outputs
///   random-basis      seeded Haar-random orthonormal bases, each measured
///                     in its own output eigenbasis
/// The refine kind perturbs the incumbent and is generated inside
/// search_optimum, seeded from the same strategy.
std::vector<Candidate> candidate_pairs(const KrausChannel& ch, const SearchStrategy& strategy);

struct CandidateOutcome {
  std::string description;
  double best_rate_bits = 0.0;
  std::vector<long long> cliques;  // K(n) for n = 1..max_n
  bool exact = true;
};

struct SearchResult {
  Candidate best;
  RateReport report;
  std::vector<CandidateOutcome> log;
};

/// Evaluates every candidate through zero_error_rate and keeps the best
/// (ties broken by candidate order). With kind refine/all, the incumbent is
/// then improved greedily by small random unitary rotations of its basis.
SearchResult search_optimum(const KrausChannel& ch, const SearchStrategy& strategy);

}  // namespace zec
