#pragma once

#include <cstdint>
#include <vector>

#include "midmile/model.hpp"

namespace midmile {

// Open-hub bit vector, one entry per site (index order = id order).
using Chromosome = std::vector<std::uint8_t>;

struct SorterChoice {
  int tier = 0;   // index into CostParams::sorter_tiers
  int units = 1;
};

// Decoded solution. Per-site vectors are sized site_count(); throughput,
// sorter and floor_area are meaningful only at open-hub indices.
struct NetworkDesign {
  std::vector<std::uint32_t> open_hubs;   // ascending site indices
  std::vector<std::uint32_t> assignment;  // site index -> hub site index
  std::vector<double> hub_throughput;     // inbound + outbound of assigned sites
  std::vector<SorterChoice> sorter;
  std::vector<double> floor_area;         // sqft
};

// Nearest open hub by road distance, ties to the smaller site id; open hubs
// are always assigned to themselves. Throws InputError when no bit is set.
std::vector<std::uint32_t> assign_sites(const Chromosome& chromosome,
                                        const Problem& problem);

// throughput(h) = sum over assigned sites of outbound + inbound; every
// shipment is sorted once at its origin hub and once at its destination hub.
std::vector<double> hub_throughputs(const std::vector<std::uint32_t>& assignment,
                                    const Problem& problem);

// Smallest tier covering the throughput, one unit; beyond the largest tier,
// largest tier with ceil(throughput / capacity) units. Zero throughput still
// gets one smallest-tier unit.
SorterChoice size_sorter(double throughput, const std::vector<SorterTier>& tiers);

NetworkDesign decode(const Chromosome& chromosome, const Problem& problem);

}  // namespace midmile
