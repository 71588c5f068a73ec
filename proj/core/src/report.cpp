#include "zec/report.hpp"

#include <sstream>

#include <json.hpp>

namespace zec {

namespace {

using json = nlohmann::ordered_json;

json graph_to_json(const CharacteristicGraph& cg) {
  json j;
  j["vertices"] = cg.graph.vertex_count();
  j["labels"] = cg.labels;
  json edges = json::array();
  for (auto [u, v] : cg.graph.edges()) edges.push_back(json::array({u, v}));
  j["edges"] = std::move(edges);
  json sets = json::array();
  for (const OutcomeSet& s : cg.outcome_sets) {
    json sj;
    sj["outcomes"] = s.indices;
    sj["probabilities"] = s.probabilities;
    sets.push_back(std::move(sj));
  }
  j["outcome_sets"] = std::move(sets);
  return j;
}

json rates_to_json(const RateReport& rates) {
  json j;
  json table = json::array();
  for (const RateEntry& e : rates.table) {
    json ej;
    ej["n"] = e.n;
    ej["clique"] = e.clique;
    ej["rate_bits"] = e.rate_bits;
    ej["exact"] = e.exact;
    table.push_back(std::move(ej));
  }
  j["units"] = "bits per channel use";
  j["table"] = std::move(table);
  j["best_n"] = rates.best_n;
  j["best_rate_bits"] = rates.best_rate_bits;
  json witness = json::array();
  for (const std::vector<std::string>& tuple : witness_code(rates)) witness.push_back(tuple);
  j["witness_code"] = std::move(witness);
  j["witness_verified"] = rates.witness_verified;
  if (rates.theta) {
    j["theta"] = *rates.theta;
    j["theta_rate_bits"] = *rates.theta_rate_bits;
  }
  return j;
}

}  // namespace

std::string report_to_json(const Report& report) {
  json j;
  j["tool"] = "zec";
  json in;
  in["command"] = report.inputs.command;
  in["channel_source"] = report.inputs.channel_source;
  in["channel_hash"] = report.inputs.channel_hash;
  if (!report.inputs.channel_name.empty()) in["channel_name"] = report.inputs.channel_name;
  in["dimension"] = report.inputs.dimension;
  in["kraus_count"] = report.inputs.kraus_count;
  if (!report.inputs.parameters.empty()) in["parameters"] = report.inputs.parameters;
  if (!report.inputs.states.empty()) in["states"] = report.inputs.states;
  if (!report.inputs.measurement.empty()) in["measurement"] = report.inputs.measurement;
  if (!report.inputs.strategy.empty()) {
    in["strategy"] = report.inputs.strategy;
    in["trials"] = report.inputs.trials;
    in["seed"] = report.inputs.seed;
  }
  in["max_n"] = report.inputs.max_n;
  in["theta_requested"] = report.inputs.theta_requested;
  j["inputs"] = std::move(in);

  json tols;
  tols["eps_adj"] = report.tolerances.eps_adj;
  tols["eig_cutoff"] = report.tolerances.eig_cutoff;
  tols["theta_tol"] = report.tolerances.theta_tol;
  j["tolerances"] = std::move(tols);

  if (report.rates) {
    j["characteristic_graph"] = graph_to_json(report.rates->characteristic);
    j["rates"] = rates_to_json(*report.rates);
  }
  if (!report.search_log.empty()) {
    json log = json::array();
    for (const CandidateOutcome& c : report.search_log) {
      json cj;
      cj["candidate"] = c.description;
      cj["cliques"] = c.cliques;
      cj["best_rate_bits"] = c.best_rate_bits;
      cj["exact"] = c.exact;
      log.push_back(std::move(cj));
    }
    j["search_log"] = std::move(log);
  }
  if (!report.verdict.empty()) j["verdict"] = report.verdict;
  j["warnings"] = report.warnings;
  return j.dump(2) + "\n";
}

std::string report_to_text(const Report& report) {
  std::ostringstream out;
  out << "channel: " << report.inputs.channel_source;
  if (!report.inputs.channel_name.empty()) out << " (" << report.inputs.channel_name << ")";
  out << "  dim=" << report.inputs.dimension << "  kraus=" << report.inputs.kraus_count << "\n";
  if (!report.inputs.parameters.empty()) {
    out << "parameters:";
    for (const auto& [k, v] : report.inputs.parameters) out << " " << k << "=" << v;
    out << "\n";
  }
  if (report.rates) {
    const RateReport& r = *report.rates;
    out << "characteristic graph: " << r.characteristic.graph.vertex_count() << " vertices,"
        << " edges";
    for (auto [u, v] : r.characteristic.graph.edges())
      out << " {" << r.characteristic.labels[u] << "," << r.characteristic.labels[v] << "}";
    out << "\n";
    out << "  n   K(n)        rate (bits/use)\n";
    for (const RateEntry& e : r.table) {
      out << "  " << e.n << "   " << e.clique << (e.exact ? "" : " (lower bound)")
          << "        " << e.rate_bits << "\n";
    }
    out << "best rate: " << r.best_rate_bits << " bits/use at n=" << r.best_n << "\n";
    out << "witness code:";
    for (const auto& tuple : witness_code(r)) {
      out << " (";
      for (size_t t = 0; t < tuple.size(); ++t) out << (t ? "," : "") << tuple[t];
      out << ")";
    }
    out << (r.witness_verified ? "  [re-verified]" : "  [VERIFICATION FAILED]") << "\n";
    if (r.theta)
      out << "theta(confusability) = " << *r.theta << "  rate bound = " << *r.theta_rate_bits
          << " bits/use\n";
  }
  for (const CandidateOutcome& c : report.search_log)
    out << "candidate " << c.description << ": best rate " << c.best_rate_bits << " bits/use\n";
  if (!report.verdict.empty()) out << "verdict: " << report.verdict << "\n";
  for (const std::string& w : report.warnings) out << "warning: " << w << "\n";
  return out.str();
}

}  // namespace zec
