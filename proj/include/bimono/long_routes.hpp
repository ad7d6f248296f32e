#pragma once

#include <optional>
#include <vector>

#include "bimono/bigraph.hpp"

namespace bimono {

struct PathResult {
    Color color = Color::Red;
    std::vector<VertexRef> vertices;  // alternating X/Y sequence
    int order() const { return static_cast<int>(vertices.size()); }
};

struct CycleResult {
    Color color = Color::Red;
    std::vector<VertexRef> vertices;  // cyclic alternating sequence
    int length() const { return static_cast<int>(vertices.size()); }
};

// Consecutive vertices joined by an edge of the claimed color, all distinct.
// Throws ValidationError otherwise.
void validate_path(const ColoredBigraph& g, const PathResult& p);
void validate_cycle(const ColoredBigraph& g, const CycleResult& c);

// Plain undirected loopless graph on `n` vertices (host for the long-cycle
// extraction, which is not bipartite-specific).
struct SimpleGraph {
    int n = 0;
    std::vector<Mask> adj;

    explicit SimpleGraph(int n_vertices) : n(n_vertices), adj(n_vertices) {}
    void add_edge(int u, int v) {
        adj[u] |= bit(v);
        adj[v] |= bit(u);
    }
    long long edge_count() const {
        long long e = 0;
        for (int v = 0; v < n; ++v) e += popcount(adj[v]);
        return e / 2;
    }
};

// Balanced bipartite view with side-local indices and a mapping back to
// whatever host it was cut from.
struct BipartiteView {
    int mu = 0, mv = 0;
    std::vector<Mask> u_adj;  // U -> V masks
    std::vector<Mask> v_adj;
    std::vector<VertexRef> u_origin, v_origin;

    bool balanced() const { return mu == mv; }
};

// The color-c subgraph induced by [xs, ys].
BipartiteView make_view(const ColoredBigraph& g, Color c, Mask xs, Mask ys);

inline constexpr int kDefaultSearchCap = 12;  // per-side cap for exact search

// Maximum-order monochromatic path over both colors (exact, DFS with
// reachability pruning). Order 0 when the graph has no edges.
PathResult longest_mono_path_exact(const ColoredBigraph& g, int cap = kDefaultSearchCap);

// Maximum-length monochromatic cycle; absent if none of length >= 4 exists.
std::optional<CycleResult> longest_mono_cycle_exact(const ColoredBigraph& g,
                                                    int cap = kDefaultSearchCap);

// Single-color variants (used by the sweep kernels).
PathResult longest_path_in_color(const ColoredBigraph& g, Color c);
std::optional<CycleResult> longest_cycle_in_color(const ColoredBigraph& g, Color c);

// A cycle with >= k+1 vertices, given e(h) > k(n-1)/2. Heuristic first
// (peel low-degree vertices, extend a maximal path, close through the
// endpoint's furthest neighbor on the path), exact fallback.
std::vector<int> erdos_gallai_cycle(const SimpleGraph& h, int k);

// Exact longest cycle of a plain graph; empty if acyclic.
std::vector<int> longest_cycle_exact(const SimpleGraph& h);

// Degree-sequence sufficient condition for Hamiltonian bi-connectedness.
// Indices are 1-based in the d(u_j) <= j+1 scan; a side with no qualifying
// index imposes no constraint.
bool berge_check(const BipartiteView& h);

// Hamiltonian path from u (U-side local index) to v (V-side), or absent.
// Backtracking with fail-first ordering.
std::optional<std::vector<VertexRef>> ham_path_between(const BipartiteView& h, int u, int v);

// Generalized cover path inside the color-c subgraph: a path from `from` to
// `to` visiting exactly xs u ys. Endpoints on opposite sides need
// |xs| == |ys|; same-side endpoints need that side one larger.
std::optional<std::vector<VertexRef>> ham_path_cover(const ColoredBigraph& g, Color c, Mask xs,
                                                     Mask ys, VertexRef from, VertexRef to);

}  // namespace bimono
