#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "bimono/bigraph.hpp"
#include "bimono/rational.hpp"

namespace bimono {

// One connected component of a single color's subgraph. Isolated vertices
// never appear (a component always carries at least one edge).
struct MonoComponent {
    Color color;
    Mask xs = 0, ys = 0;
    int id = 0;

    int x_size() const { return popcount(xs); }
    int y_size() const { return popcount(ys); }
    int min_side() const { return std::min(x_size(), y_size()); }
    int total() const { return x_size() + y_size(); }
};

std::vector<MonoComponent> mono_components(const ColoredBigraph& g, Color c);

struct DoubleStar {
    VertexRef x, y;  // a c-edge maximizing d_c(x) + d_c(y)
    int size = 0;
};

DoubleStar large_double_star(const ColoredBigraph& g, Color c);

// Over both colors and all components, the one maximizing min(|xs|, |ys|);
// ties by larger total, then smallest contained vertex.
MonoComponent best_balanced_component(const ColoredBigraph& g);

struct ConnectedMatching {
    Color color = Color::Red;
    int component_id = -1;
    std::vector<std::pair<int, int>> edges;  // pairwise vertex-disjoint (x, y)

    int size() const { return static_cast<int>(edges.size()); }
};

// Exact: per-component maximum matching via augmenting paths; a connected
// matching in color c is precisely a matching inside one c-component.
ConnectedMatching max_connected_matching(const ColoredBigraph& g, Color c);

struct VertexCover {
    Mask sx = 0, sy = 0;
    int size() const { return popcount(sx) + popcount(sy); }
};

// Minimum vertex cover of the component's color subgraph, derived from a
// maximum matching via alternating reachability (Konig).
VertexCover min_cover(const ColoredBigraph& g, const MonoComponent& comp);

// Maximum matching size of the color subgraph induced by [xs, ys].
int max_matching_size(const ColoredBigraph& g, Color c, Mask xs, Mask ys);

// Connected-matching guarantee at minimum degree delta*n:
// delta*n/2 | (2*delta-1)*n | n/2 over the three regimes.
Rat matching_bound(const Rat& delta, int n);

// Monochromatic circumference rate f(delta): delta | 4*delta-2 | 1.
Rat cycle_bound(const Rat& delta);

// Orientation X-side: xprime subset of X, {y1, y2} partition of Y.
// Orientation Y-side: the mirrored reading.
struct ExtremalWitness {
    Side orientation = Side::X;
    Mask xprime = 0, y1 = 0, y2 = 0;
    Rat eta{0};
};

struct StabilityOutcome {
    std::optional<ConnectedMatching> matching;
    std::optional<ExtremalWitness> witness;
};

// Either a monochromatic connected matching of size >= (1/2+eta)n, or a
// witness that the coloring is 2eta-extremal, built along the stability
// proof. Requires delta(G) > (3/4+eta)n. Throws BelowRegimeError when the
// construction legitimately fails at small n.
StabilityOutcome matching_or_witness(const ColoredBigraph& g, const Rat& eta);

}  // namespace bimono
