#pragma once

#include <cstdint>

#include "bimono/bigraph.hpp"
#include "bimono/rational.hpp"

namespace bimono {

// Counter-based generator: the decision for edge (x,y) in a given color
// depends only on (seed, x, y, color), so instances are reproducible and
// order-independent.
std::uint64_t splitmix64(std::uint64_t z);

ColoredBigraph random_coloring(int n, const Rat& red_prob, const Rat& blue_prob,
                               std::uint64_t seed);

// Rejection-samples until min_degree(g) >= floor; bounded retries.
ColoredBigraph random_coloring_with_floor(int n, const Rat& red_prob, const Rat& blue_prob,
                                          std::uint64_t seed, int min_degree_floor,
                                          int max_retries = 1000);

}  // namespace bimono
