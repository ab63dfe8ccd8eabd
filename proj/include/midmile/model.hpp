#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "midmile/geo.hpp"

namespace midmile {

// A distribution center; any DC is also a candidate hub location.
struct Site {
  std::string id;
  double lat = 0.0;
  double lon = 0.0;
  double outbound_daily = 0.0;  // peak-day shipments originating here
  double inbound_daily = 0.0;   // peak-day shipments destined here
  bool is_existing_hub = false;
  bool is_fixed_hub = false;  // implies is_existing_hub; can never close
};

// Raw OD volume as read from input; ids are resolved to indices at build.
struct FlowRecord {
  std::string origin_id;
  std::string dest_id;
  double shipments = 0.0;
};

// Index-resolved flow; indices refer to Problem::sites.
struct Flow {
  std::uint32_t origin = 0;
  std::uint32_t dest = 0;
  double shipments = 0.0;
};

struct Constraints {
  int hub_count_min = 1;
  int hub_count_max = 1;
  int min_dcs_per_hub = 1;
  double min_volume_per_hub = 0.0;
  double min_inter_hub_km = 0.0;
  double volume_multiplier = 1.0;  // five-year growth scalar, applied at load
};

struct SorterTier {
  double capacity = 0.0;      // shipments/day
  double cost_per_day = 0.0;  // amortized
};

struct CostParams {
  double area_sqft_per_shipment = 0.5;
  double rent_per_sqft_day = 2.0;
  double handling_per_shipment = 2.0;
  std::vector<SorterTier> sorter_tiers{
      {25000.0, 8000.0}, {75000.0, 20000.0}, {150000.0, 35000.0}};
  double truck_capacity = 5000.0;
  double truck_cost_per_km = 35.0;
  double van_capacity = 800.0;
  double van_cost_per_km = 12.0;
  double milkrun_scale = 1.0;        // multiplies both milk-run components
  double linehaul_km_per_day = 500.0;
  double milkrun_max_km = 250.0;     // 24-hour hub->DC reach
  double penalty_per_shipment_day = 5.0;
};

// Immutable instance. Sites are sorted by id; index order is the canonical
// iteration order everywhere. Flows are sorted by (origin, dest).
struct Problem {
  std::vector<Site> sites;
  std::vector<Flow> flows;
  DistanceMatrix distances;
  Constraints constraints;
  CostParams costs;
  GeoParams geo;

  // caches, filled at build
  std::vector<std::uint32_t> fixed_hub_indices;
  std::vector<int> promised_days;  // per flow: max(1, ceil(direct / km_per_day))

  std::size_t site_count() const { return sites.size(); }
};

struct Violation {
  std::string where;  // site id, "flow o->d", or "" for instance-level
  std::string rule;
  std::string detail;

  std::string to_string() const;
};

// Sorts sites, resolves flow ids (unknown id -> InputError), applies the
// volume multiplier once and computes the distance matrix. Does not validate;
// callers run validate_problem and decide whether to refuse.
Problem build_problem(std::vector<Site> sites, const std::vector<FlowRecord>& flows,
                      const Constraints& constraints, const CostParams& costs,
                      const GeoParams& geo = GeoParams{});

// Pure invariant check; returns findings sorted by (where, rule), never throws.
std::vector<Violation> validate_problem(const Problem& problem);

// Clone with one cost parameter overridden; caches stay valid.
Problem with_milkrun_scale(const Problem& problem, double scale);

// round half toward +infinity
double round_half_up(double x);

}  // namespace midmile
