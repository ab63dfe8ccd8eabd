#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "midmile/model.hpp"

namespace midmile {

// Seeded synthetic instance generator: clustered sites over an India-shaped
// bounding box, power-law site volumes, gravity-model OD flows balanced by
// iterative proportional fitting and rounded to integers with exact
// conservation.
struct SynthParams {
  int n_sites = 50;
  int n_clusters = 5;
  std::uint64_t seed = 1;
  std::string profile = "peak";  // "peak" applies festive_factor, "average" does not
  double lat_min = 8.0, lat_max = 32.0;
  double lon_min = 70.0, lon_max = 90.0;
  double cluster_spread_deg = 0.8;      // stddev of site scatter around a center
  double total_daily_volume = 100000.0; // average-profile total outbound
  double powerlaw_alpha = 1.4;          // Pareto shape of site volumes
  double gravity_gamma = 1.0;           // distance exponent in the gravity model
  double festive_factor = 2.75;
  int n_existing_hubs = -1;  // -1 = one per cluster
  int n_fixed_hubs = 0;      // taken from the existing hubs, largest first
};

struct SynthResult {
  std::vector<Site> sites;
  std::vector<FlowRecord> flows;
};

SynthResult generate(const SynthParams& params);

}  // namespace midmile
