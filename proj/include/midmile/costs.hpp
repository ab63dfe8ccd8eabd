#pragma once

#include <cstdint>
#include <utility>

#include "midmile/assignment.hpp"
#include "midmile/model.hpp"

namespace midmile {

// All fields are currency per peak day. total is the sum of the seven cost
// fields; the breach fields are counters, not costs.
struct CostBreakdown {
  double hub_floor = 0.0;
  double hub_handling = 0.0;
  double hub_sorter = 0.0;
  double line_haul = 0.0;
  double milkrun_arrival = 0.0;
  double milkrun_departure = 0.0;
  double tat_penalty = 0.0;
  double total = 0.0;
  double tat_breach_shipments = 0.0;
  std::int64_t milkrun_breach_count = 0;
};

struct HubSetupCost {
  double floor = 0.0;
  double handling = 0.0;
  double sorter = 0.0;
};

HubSetupCost hub_setup_cost(const NetworkDesign& design, const Problem& problem);

// Flow is aggregated per ordered hub pair; each pair dispatches
// ceil(volume / truck_capacity) trucks over the hub-hub distance.
double line_haul_cost(const NetworkDesign& design, const Problem& problem);

// Radial per-spoke round trips: arrival side moves each spoke's outbound to
// its hub, departure side moves its inbound from the hub. Both components are
// multiplied by milkrun_scale.
std::pair<double, double> milk_run_cost(const NetworkDesign& design,
                                        const Problem& problem);

// (penalty currency/day, breached shipments/day). Lateness compares ceil-day
// travel over the hub path against the direct origin-destination promise.
std::pair<double, double> tat_penalty(const NetworkDesign& design,
                                      const Problem& problem);

// Spokes farther than milkrun_max_km from their hub.
std::int64_t milkrun_breaches(const NetworkDesign& design, const Problem& problem);

CostBreakdown evaluate(const NetworkDesign& design, const Problem& problem);

}  // namespace midmile
