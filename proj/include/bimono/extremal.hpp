#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "bimono/bigraph.hpp"
#include "bimono/long_routes.hpp"
#include "bimono/mono_structure.hpp"
#include "bimono/rational.hpp"

namespace bimono {

// eta-extremal witness check with exact arithmetic: three size bounds of
// (1/2-eta)n and the two edge-count bounds of eta*n^2.
bool verify_witness(const ColoredBigraph& g, const ExtremalWitness& w);

// Searches witness candidates derived from the balanced components of each
// color (component bipartitions and cover-based triples), both orientations,
// plus the trivial half-split. Returns the first that verifies.
std::optional<ExtremalWitness> find_witness(const ColoredBigraph& g, const Rat& eta);

struct RouteParams {
    Rat gamma{0};
    Rat eta{0};
    Rat theta{0};
};

// [xs, ys] in `color` with the contract that every equal-size sub-pair of
// size >= (1/2 - gamma/4)n is Hamiltonian bi-connected. excluded_* are the
// low-degree vertices removed to get there.
struct BiConnectedPair {
    Mask xs = 0, ys = 0;
    Color color = Color::Blue;
    Mask excluded_x = 0, excluded_y = 0;
};

// Degree filter of the long-path lemma: removes X_S/Y_S (asserting they
// hold <= 4*theta*n vertices) and returns the bi-connected remainder.
BiConnectedPair long_path_prop(const ColoredBigraph& g, Mask xprime, Mask yprime,
                               const RouteParams& params, Color color);

// Hamiltonian path of [xstar, ystar] in pair.color from x to y.
PathResult extract_ham_path(const ColoredBigraph& g, const BiConnectedPair& pair, Mask xstar_set,
                            Mask ystar_set, VertexRef x, VertexRef y, const RouteParams& params);

// Blue cycle on >= 2*ceil(n/2) vertices from a 3n/4-wide blue-dominated
// pair: greedy path covering Y_S, then closure through a Hamiltonian
// bi-connected remainder.
CycleResult big_part_prop(const ColoredBigraph& g, Mask xprime, Mask yprime,
                          const RouteParams& params);

struct RouteCertificate {
    PathResult path;
    CycleResult cycle;
    std::vector<std::string> branch_trace;

    std::string to_json() const;
    static RouteCertificate from_json(const std::string& text);
};

// Full extremal-case pipeline: from a verified witness to a certified
// monochromatic path of order >= 2*ceil(n/2) and cycle of length
// >= 2*floor(n/2).
RouteCertificate extremal_route(const ColoredBigraph& g, const ExtremalWitness& w,
                                const RouteParams& params);

struct HatPartition {
    Mask w_r = 0;                    // separator, on the Y side; <= 1 vertex
    bool w_r_on_y = true;
    Mask hat_x1 = 0, hat_x2 = 0;     // partition of X
    Mask hat_y1 = 0, hat_y2 = 0;     // partition of Y minus the separator
};

struct RedCycleSignal {};  // >= 2 disjoint red connecting paths exist

using SeparatorResult = std::variant<RedCycleSignal, HatPartition>;

// Menger separator between two disjoint red bi-connected pairs, via
// unit-capacity vertex max-flow; on flow < 2 returns the <= 1-vertex
// separator and a hat partition with no red edges across.
SeparatorResult separator_partition(const ColoredBigraph& g, const BiConnectedPair& pair_a,
                                    const BiConnectedPair& pair_b);

// Independent re-validation used by `check-cert`: colors, adjacency,
// distinctness and the 2*ceil(n/2) / 2*floor(n/2) length bounds.
// Throws ValidationError naming the first violated condition.
void check_certificate(const ColoredBigraph& g, const RouteCertificate& cert);

}  // namespace bimono
