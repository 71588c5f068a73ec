#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zec/capacity.hpp"
#include "zec/config.hpp"
#include "zec/search.hpp"

namespace zec {

/// Echo of everything that determines a run, so a report is self-contained:
/// re-running the CLI on the echoed inputs and flags reproduces the report
/// byte for byte (given the same seed).
struct ReportInputs {
  std::string command;
  std::string channel_source;  // file path or "<builtin:...>"
  std::string channel_hash;    // fnv1a64 of the channel spec bytes
  std::string channel_name;
  int dimension = 0;
  int kraus_count = 0;
  std::map<std::string, double> parameters;
  std::string states;
  std::string measurement;
  std::string strategy;
  int trials = 0;
  std::uint64_t seed = 0;
  int max_n = 2;
  bool theta_requested = false;
};

struct Report {
  ReportInputs inputs;
  Tolerances tolerances;
  std::optional<RateReport> rates;            // rate/demo/search commands
  std::vector<CandidateOutcome> search_log;   // search command
  /// "tight" when the achieved rate meets the theta bound within 1e-4,
  /// "bounded" when theta was computed but a gap remains, "" otherwise.
  std::string verdict;
  std::vector<std::string> warnings;
};

/// Deterministic JSON rendering (fixed key order, shortest round-trip
/// numbers). Rates are bits per channel use throughout.
std::string report_to_json(const Report& report);

/// Human-readable table for --pretty.
std::string report_to_text(const Report& report);

}  // namespace zec
