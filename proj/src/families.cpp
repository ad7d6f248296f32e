#include "bimono/families.hpp"

#include <algorithm>

namespace bimono {

const char* family_name(Family f) {
    switch (f) {
        case Family::LargeDeg: return "large-deg";
        case Family::MediumDeg: return "medium-deg";
        case Family::SmallDeg: return "small-deg";
        case Family::CycleExtremal: return "cycle-extremal";
    }
    return "?";
}

Family family_from_name(const std::string& name) {
    if (name == "large-deg") return Family::LargeDeg;
    if (name == "medium-deg") return Family::MediumDeg;
    if (name == "small-deg") return Family::SmallDeg;
    if (name == "cycle-extremal") return Family::CycleExtremal;
    throw PreconditionError("unknown family: " + name);
}

std::string FamilyClaims::to_json() const {
    return "{\"min_degree\": " + std::to_string(min_degree) +
           ", \"longest_mono_path\": " + std::to_string(longest_mono_path) +
           ", \"longest_mono_cycle\": " + std::to_string(longest_mono_cycle) + "}";
}

namespace {

// Longest path / cycle order in a complete bipartite block with sides a, b.
int block_path(int a, int b) {
    int lo = std::min(a, b);
    if (lo == 0) return 0;
    return 2 * lo + (a != b ? 1 : 0);
}

int block_cycle(int a, int b) {
    int lo = std::min(a, b);
    return lo >= 2 ? 2 * lo : 0;
}

int clamp_cycle(int len) { return len >= 4 ? len : 0; }

struct Range {
    int lo, hi;  // [lo, hi)
};

void add_block(EdgeList& edges, Range xs, Range ys) {
    for (int x = xs.lo; x < xs.hi; ++x)
        for (int y = ys.lo; y < ys.hi; ++y) edges.emplace_back(x, y);
}

}  // namespace

std::pair<ColoredBigraph, FamilyClaims> gen_large_deg(int n) {
    if (n < 1) throw PreconditionError("gen_large_deg: n must be >= 1");
    int c = (n + 1) / 2;  // |X1| = |Y1| = ceil(n/2)
    Range x1{0, c}, x2{c, n}, y1{0, c}, y2{c, n};
    EdgeList red, blue;
    add_block(blue, x1, y1);
    add_block(blue, x2, y2);
    add_block(red, x1, y2);
    add_block(red, x2, y1);
    FamilyClaims claims{n, 2 * c, clamp_cycle(2 * c)};
    return {ColoredBigraph(n, red, blue), claims};
}

std::pair<ColoredBigraph, FamilyClaims> gen_medium_deg(int n, int k) {
    if (n < 4 || n % 4 != 0) throw PreconditionError("gen_medium_deg: n must be divisible by 4");
    if (k < 0 || 12 * k > n) throw PreconditionError("gen_medium_deg: need 0 <= k <= n/12");
    int a = n / 4 + k, b = n / 4 - k;
    Range x1{0, a}, x2{a, 2 * a}, x3{2 * a, 2 * a + b}, x4{2 * a + b, n};
    Range y1{0, b}, y2{b, 2 * b}, y3{2 * b, 2 * b + a}, y4{2 * b + a, n};
    EdgeList red, blue;
    add_block(blue, {x1.lo, x2.hi}, {y1.lo, y2.hi});
    add_block(blue, {x3.lo, x4.hi}, {y3.lo, y4.hi});
    add_block(red, x1, y3);
    add_block(red, x2, y4);
    add_block(red, x3, y1);
    add_block(red, x4, y2);
    FamilyClaims claims{3 * n / 4 - k, std::max(block_path(2 * a, 2 * b), block_path(a, a)),
                        clamp_cycle(std::max(block_cycle(2 * a, 2 * b), block_cycle(a, a)))};
    return {ColoredBigraph(n, red, blue), claims};
}

std::pair<ColoredBigraph, FamilyClaims> gen_small_deg(int n, int k) {
    if (n < 1) throw PreconditionError("gen_small_deg: n must be >= 1");
    if (k < 0 || 3 * k > n) throw PreconditionError("gen_small_deg: need 0 <= k <= n/3");
    int c = (k + 1) / 2, f = k / 2, g = n - k;
    Range x1{0, c}, x2{c, k}, x3{k, n};
    Range y1{0, c}, y2{c, k}, y3{k, n};
    EdgeList red, blue;
    add_block(blue, x1, y2);
    add_block(blue, x2, y3);
    add_block(blue, x3, y1);
    add_block(red, x1, y3);
    add_block(red, x2, y1);
    add_block(red, x3, y2);
    int path = std::max({block_path(c, f), block_path(f, g), block_path(g, c)});
    int cycle = std::max({block_cycle(c, f), block_cycle(f, g), block_cycle(g, c)});
    FamilyClaims claims{k, path, clamp_cycle(cycle)};
    return {ColoredBigraph(n, red, blue), claims};
}

std::pair<ColoredBigraph, FamilyClaims> gen_cycle_extremal(int n) {
    if (n % 2 == 0) throw PreconditionError("gen_cycle_extremal: n must be odd");
    if (n < 3) throw PreconditionError("gen_cycle_extremal: n must be >= 3");
    int m = n / 2;
    Range x1{0, m}, x2{m, 2 * m}, y1{0, m}, y2{m, 2 * m};
    int xstar = n - 1, ystar = n - 1;
    EdgeList red, blue;
    add_block(red, x1, y1);
    add_block(red, x2, y2);
    add_block(blue, x1, y2);
    add_block(blue, x2, y1);
    for (int y = 0; y < n; ++y) blue.emplace_back(xstar, y);
    for (int x = 0; x < n - 1; ++x) red.emplace_back(x, ystar);
    // The longest monochromatic path spans everything except the vertex the
    // color cannot reach (x* has no red edges, y* only one blue edge).
    FamilyClaims claims{n, 2 * n - 1, clamp_cycle(2 * m)};
    return {ColoredBigraph(n, red, blue), claims};
}

std::pair<ColoredBigraph, FamilyClaims> generate(const FamilySpec& spec) {
    switch (spec.family) {
        case Family::LargeDeg: return gen_large_deg(spec.n);
        case Family::MediumDeg: return gen_medium_deg(spec.n, spec.k);
        case Family::SmallDeg: return gen_small_deg(spec.n, spec.k);
        case Family::CycleExtremal: return gen_cycle_extremal(spec.n);
    }
    throw PreconditionError("bad family spec");
}

}  // namespace bimono
