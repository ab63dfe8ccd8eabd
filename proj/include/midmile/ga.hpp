#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "midmile/costs.hpp"
#include "midmile/rng.hpp"

namespace midmile {

struct GaConfig {
  int population_size = 200;  // >= 4, even
  int generations = 200;
  double crossover_rate = 0.9;
  // per-bit flip probability; unset means 1 / site_count
  std::optional<double> mutation_rate_per_bit;
  int tournament_size = 3;
  int elite_count = 2;
  std::uint64_t rng_seed = 1;
  int stall_generations = 50;  // stop when best unimproved this long
  int threads = 0;             // 0 = hardware concurrency
};

struct RepairOutcome {
  Chromosome chromosome;
  // false when the DC/volume floors could not be satisfied; such individuals
  // carry a finite fitness surcharge instead of being discarded.
  bool feasible = true;
};

struct GenerationStat {
  double best_total = 0.0;
  double mean_total = 0.0;
};

struct GaResult {
  Chromosome best_chromosome;
  NetworkDesign best_design;
  CostBreakdown best_cost;
  bool best_feasible = true;
  std::vector<GenerationStat> history;
  int generations_run = 0;
};

// Constraint repair, applied in order: fixed bits, inter-hub spacing, hub
// count range, then the per-hub DC and volume floors. Deterministic; the rng
// is accepted for interface stability but the rules need no randomness.
RepairOutcome repair(Chromosome chromosome, const Problem& problem, RngStream& rng);

// The four feasibility checks repair promises (fixed bits, count range,
// spacing, decoded floors), stated directly; used as the independent check
// of repair output and for reporting.
std::vector<std::string> constraint_violations(const Chromosome& chromosome,
                                               const Problem& problem);

// Individual 0 is the repaired current network (all existing hubs open); the
// rest are repaired random bit vectors with open-probability midpoint/n.
std::vector<RepairOutcome> initialize_population(const Problem& problem,
                                                 const GaConfig& config,
                                                 RngStream& rng);

// k uniform draws with replacement; lowest fitness wins, ties to the smaller
// index.
std::size_t tournament_select(const std::vector<double>& fitness, int k,
                              RngStream& rng);

// With probability rate, uniform crossover; otherwise children copy parents.
std::pair<Chromosome, Chromosome> crossover(const Chromosome& parent_a,
                                            const Chromosome& parent_b,
                                            double rate, RngStream& rng);

// Flips each non-fixed bit with probability rate_per_bit.
Chromosome mutate(Chromosome chromosome, double rate_per_bit, RngStream& rng,
                  const std::vector<std::uint8_t>& fixed_mask);

// Seeded, elitist GA; (problem, config) fully determines the result
// regardless of the thread count used for fitness evaluation.
GaResult run_ga(const Problem& problem, const GaConfig& config);

}  // namespace midmile
