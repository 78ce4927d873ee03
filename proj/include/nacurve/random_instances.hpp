#ifndef NACURVE_RANDOM_INSTANCES_HPP
#define NACURVE_RANDOM_INSTANCES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "nacurve/disk.hpp"
#include "nacurve/rng.hpp"
#include "nacurve/skeleton.hpp"

namespace nacurve {

// Random skeleton of an open analytic curve: every component carries >= 1 leg;
// loops, multi-edges, several components and positive genera all occur.
Skeleton random_open_skeleton(SplitMix64& rng, int max_vertices);

// Random disjoint connected vertex sets (possibly none) to collapse.
std::vector<std::vector<int>> random_pieces(SplitMix64& rng, const Skeleton& s);

// Random disks over p with centers divisible by p, so any collection admits a
// common model (joins cannot escape the open unit disk).
std::vector<ClosedDisk> random_disk_collection(SplitMix64& rng, const Int& p, int max_size);

struct VcpropFuzzSummary {
    uint64_t count = 0;
    uint64_t discrepancies = 0;
    uint64_t first_counterexample_index = 0;  // valid when discrepancies > 0
    std::string first_counterexample;         // human-readable instance dump
    uint64_t almost_semistable_hits = 0;      // instances where both sides were true
};

// Generates `count` seeded (fine skeleton, contraction) instances and checks
// cohomological_test == (is_almost_semistable && is_tree_like) exactly.
VcpropFuzzSummary run_vcprop_fuzz(uint64_t seed, uint64_t count);

}  // namespace nacurve

#endif
