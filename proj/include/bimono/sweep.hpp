#pragma once

#include <cstdint>

#include "bimono/bigraph.hpp"

namespace bimono {

// Exhaustive enumeration of the 2^(n*n) single-color assignments of K_{n,n}:
// bit (x*n + y) of the coloring index set means edge (x,y) is red, else blue.

ColoredBigraph coloring_from_index(int n, std::uint64_t code);

struct SweepResult {
    std::uint64_t colorings = 0;
    std::uint64_t path_violations = 0;   // longest mono path < 2*ceil(n/2)
    std::uint64_t cycle_violations = 0;  // longest mono cycle < 2*floor(n/2) (when >= 4)
    int min_path = ColoredBigraph::kMaxN * 2 + 1;
    int min_cycle = ColoredBigraph::kMaxN * 2 + 1;

    void merge(const SweepResult& o);
};

// Half-open shard [lo, hi) of coloring indices; lo = 0, hi = 1 << (n*n) for
// the full space. The two versions must agree exactly.
SweepResult sweep_serial(int n, std::uint64_t lo, std::uint64_t hi);
SweepResult sweep_parallel(int n, std::uint64_t lo, std::uint64_t hi, int jobs = 0);

}  // namespace bimono
