#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "midmile/ga.hpp"
#include "midmile/scenario.hpp"

namespace midmile {

struct AppConfig {
  Constraints constraints;
  CostParams costs;
  GeoParams geo;
  GaConfig ga;
  bool hub_count_max_auto = true;  // "auto" resolves to the site count at load
};

// Flat key = value text, '#' starts a comment; unknown or duplicate keys are
// hard errors. Every key has a default (see the shipped example config).
AppConfig parse_config(std::istream& in, const std::string& source_name);
AppConfig load_config(const std::string& path);

std::vector<Site> read_sites_csv(const std::string& path);

// Validates ids against the site list and rejects duplicate (origin, dest)
// pairs, reporting the offending line.
std::vector<FlowRecord> read_flows_csv(const std::string& path,
                                       const std::vector<Site>& sites);

// Reads the three files, builds the Problem (resolving hub_count_max = auto
// and applying the volume multiplier) and refuses on any validation finding.
Problem load_inputs(const std::string& sites_path, const std::string& flows_path,
                    const std::string& config_path);
Problem load_inputs(const std::string& sites_path, const std::string& flows_path,
                    const AppConfig& config);

// Report writers. Output is deterministic byte-for-byte for a given input and
// seed: keys sorted, floats at 9 significant digits, no timestamps outside
// meta.json.
void write_design_json(const std::string& path, const Problem& problem,
                       const NetworkDesign& design, const CostBreakdown& cost,
                       const GaResult* ga = nullptr,
                       const std::uint64_t* seed = nullptr);
void write_assignment_csv(const std::string& path, const Problem& problem,
                          const NetworkDesign& design);
void write_network_geojson(const std::string& path, const Problem& problem,
                           const NetworkDesign& design);
void write_plan_json(const std::string& path, const Problem& problem,
                     const RationalizationPlan& plan);
void write_sweep_csv(const std::string& path, const std::vector<ScenarioRow>& rows);
void write_sites_csv(const std::string& path, const std::vector<Site>& sites);
void write_flows_csv(const std::string& path, const std::vector<FlowRecord>& flows);
void write_meta_json(const std::string& path, const std::string& command,
                     double elapsed_seconds);

// Open-hub id list -> chromosome; unknown id -> InputError.
Chromosome chromosome_from_hub_ids(const std::vector<std::string>& ids,
                                   const Problem& problem);

// Nearest double representable with 9 significant decimal digits; applied to
// every float written into a report.
double round_sig9(double x);

}  // namespace midmile
