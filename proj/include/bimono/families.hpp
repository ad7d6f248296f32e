#pragma once

#include <string>
#include <utility>

#include "bimono/bigraph.hpp"

namespace bimono {

enum class Family { LargeDeg, MediumDeg, SmallDeg, CycleExtremal };

const char* family_name(Family f);
Family family_from_name(const std::string& name);

struct FamilySpec {
    Family family;
    int n = 0;
    int k = 0;  // unused for LargeDeg / CycleExtremal
};

// Claimed parameters of a tightness construction, exact at every desk-scale
// (n, k). Cycle values below 4 are clamped to 0 (no cycle exists in a
// bipartite graph on fewer than 4 vertices).
struct FamilyClaims {
    int min_degree = 0;
    int longest_mono_path = 0;   // vertices
    int longest_mono_cycle = 0;  // vertices

    std::string to_json() const;
};

std::pair<ColoredBigraph, FamilyClaims> gen_large_deg(int n);
std::pair<ColoredBigraph, FamilyClaims> gen_medium_deg(int n, int k);
std::pair<ColoredBigraph, FamilyClaims> gen_small_deg(int n, int k);
std::pair<ColoredBigraph, FamilyClaims> gen_cycle_extremal(int n);

std::pair<ColoredBigraph, FamilyClaims> generate(const FamilySpec& spec);

}  // namespace bimono
