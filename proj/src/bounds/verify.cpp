#include <chrono>

#include "hlink/bounds.hpp"
#include "hlink/connectivity.hpp"
#include "hlink/instance_json.hpp"

namespace hlink {

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

std::string_view to_string(WitnessVerdict v) {
  switch (v) {
    case WitnessVerdict::NoLinkage: return "NoLinkage";
    case WitnessVerdict::NotFoundWithinBudget: return "NotFoundWithinBudget";
    case WitnessVerdict::Found: return "FOUND";
  }
  return "?";
}

VerificationReport verify_construction(const ConstructedInstance& inst, const SearchBudget& budget) {
  VerificationReport r;
  r.family = inst.family;
  r.params = inst.params;
  r.witness_pattern = inst.witness_pattern;
  r.witness_labels = inst.witness_labels();
  r.claimed_n = inst.claimed_n;
  r.claimed_min_degree = inst.claimed_min_degree;
  r.claimed_kappa = inst.claimed_kappa;

  const auto structure_start = std::chrono::steady_clock::now();
  r.n = inst.graph.vertex_count();
  r.min_degree = r.n > 0 ? min_degree(inst.graph) : 0;
  r.kappa = r.n > 0 ? vertex_connectivity(inst.graph).kappa : 0;
  r.n_ok = r.n == inst.claimed_n;
  r.min_degree_ok = r.min_degree == inst.claimed_min_degree;
  r.kappa_ok = r.kappa == inst.claimed_kappa;
  r.structure_seconds = seconds_since(structure_start);

  const auto witness_start = std::chrono::steady_clock::now();
  const auto outcome = solve_linkage(inst.graph, inst.pattern(), inst.witness_tau, budget);
  r.nodes_expanded = outcome.nodes_expanded;
  switch (outcome.verdict) {
    case Verdict::NoLinkage: r.witness_verdict = WitnessVerdict::NoLinkage; break;
    case Verdict::BudgetExceeded: r.witness_verdict = WitnessVerdict::NotFoundWithinBudget; break;
    case Verdict::Found: r.witness_verdict = WitnessVerdict::Found; break;
  }
  r.witness_seconds = seconds_since(witness_start);
  return r;
}

nlohmann::ordered_json to_json(const VerificationReport& r, bool with_timings) {
  nlohmann::ordered_json j;
  j["family"] = r.family;
  j["params"] = params_json(r.params);
  j["n"] = r.n;
  j["claimed_n"] = r.claimed_n;
  j["n_ok"] = r.n_ok;
  j["min_degree"] = r.min_degree;
  j["claimed_min_degree"] = r.claimed_min_degree;
  j["min_degree_ok"] = r.min_degree_ok;
  j["kappa"] = r.kappa;
  j["claimed_kappa"] = r.claimed_kappa;
  j["kappa_ok"] = r.kappa_ok;
  j["witness"] = {{"pattern", r.witness_pattern}, {"tau_by_label", r.witness_labels}};
  j["witness_verdict"] = to_string(r.witness_verdict);
  j["nodes_expanded"] = r.nodes_expanded;
  j["pass"] = r.pass();
  if (with_timings)
    j["timings"] = {{"structure_seconds", r.structure_seconds},
                    {"witness_seconds", r.witness_seconds}};
  return j;
}

}  // namespace hlink
