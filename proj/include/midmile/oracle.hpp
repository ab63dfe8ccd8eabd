#pragma once

#include <cstdint>

#include "midmile/costs.hpp"

namespace midmile {

// Enumeration refuses instances above this size.
inline constexpr std::size_t kOracleMaxSites = 20;

struct OracleResult {
  Chromosome chromosome;
  NetworkDesign design;
  CostBreakdown cost;
  std::uint64_t feasible_count = 0;
};

// Exact minimum over every hub subset that contains the fixed hubs, has a
// size in [hub_count_min, hub_count_max], satisfies the spacing rule
// (fixed-fixed pairs exempt) and passes the decoded DC/volume floors. Ties
// break to the lexicographically smallest open-hub id list. Throws GuardError
// above kOracleMaxSites and InfeasibleError (naming the binding constraint)
// when nothing is feasible.
OracleResult brute_force_solve(const Problem& problem);

// Number of feasible subsets, same enumeration.
std::uint64_t enumerate_feasible(const Problem& problem);

}  // namespace midmile
