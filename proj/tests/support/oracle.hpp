#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "polycon/graph.hpp"
#include "polycon/plane_map.hpp"

namespace polycon::testsupport {

struct BruteCounts {
    long long polyhedra = 0;
    long long triangulations = 0;
};

/// Independent filter-based oracle: walks every labeled graph on n vertices
/// (restricted to non-increasing degree labelings, which hit every
/// isomorphism class), keeps the planar 3-connected ones, and counts
/// isomorphism classes via embedded canonical codes. Exact for n <= 8.
BruteCounts brute_force_counts(int n);

Graph random_graph(std::mt19937& rng, int n, double edge_prob);

std::vector<int> random_permutation(std::mt19937& rng, int n);

PlaneMap relabel_map(const PlaneMap& m, const std::vector<int>& perm);

Graph relabel_graph(const Graph& g, const std::vector<int>& perm);

} // namespace polycon::testsupport
