#pragma once

#include <optional>
#include <string>
#include <vector>

#include "midmile/ga.hpp"

namespace midmile {

struct Substitution {
  std::string recommended_id;  // new location the optimizer proposed
  std::string kept_id;         // existing hub kept in its place
  double distance_km = 0.0;
};

struct RationalizationPlan {
  std::vector<std::string> final_hubs;  // sorted ids
  std::vector<Substitution> substitutions;
  std::vector<std::string> hubs_to_open;   // in final_hubs, not existing today
  std::vector<std::string> hubs_to_close;  // existing today, not in final_hubs
  NetworkDesign final_design;
  CostBreakdown final_cost;
  // current network evaluated as-is; absent when the instance has no
  // existing hubs to form a baseline
  std::optional<CostBreakdown> baseline_cost;
};

// One-for-one substitution of recommended new hubs by the nearest existing
// hub within radius_km (ties to the smaller id, each existing hub used at
// most once), then re-decode and re-evaluate.
RationalizationPlan rationalize(const NetworkDesign& ga_best, const Problem& problem,
                                double radius_km);

struct ScenarioRow {
  double scale_factor = 0.0;
  GaResult result;
};

// Runs the GA once per factor with the same seed on a clone of the problem
// whose milkrun_scale is overridden.
std::vector<ScenarioRow> compare_scenarios(const Problem& problem,
                                           const GaConfig& config,
                                           const std::vector<double>& scale_factors);

// 100 * (baseline - candidate) / baseline over tat_breach_shipments.
// Throws InputError when the baseline has zero breaches.
double breach_reduction(const CostBreakdown& baseline, const CostBreakdown& candidate);

}  // namespace midmile
