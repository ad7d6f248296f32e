#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bimono/errors.hpp"

namespace bimono {

using Mask = std::uint64_t;

inline int popcount(Mask m) { return __builtin_popcountll(m); }
inline int lowest_bit(Mask m) { return __builtin_ctzll(m); }
inline Mask bit(int i) { return Mask{1} << i; }

enum class Color : std::uint8_t { Red, Blue };

inline Color other(Color c) { return c == Color::Red ? Color::Blue : Color::Red; }
inline const char* color_name(Color c) { return c == Color::Red ? "red" : "blue"; }

enum class Side : std::uint8_t { X, Y };

inline Side other(Side s) { return s == Side::X ? Side::Y : Side::X; }

struct VertexRef {
    Side side;
    int index;
    bool operator==(const VertexRef&) const = default;
};

using EdgeList = std::vector<std::pair<int, int>>;

// Balanced X,Y-bipartite graph with red/blue (possibly overlapping) edge
// sets. E(G) = E_R u E_B; an edge may carry both colors. Immutable after
// construction; all operations are pure.
class ColoredBigraph {
public:
    static constexpr int kMaxN = 64;  // one machine word per side

    ColoredBigraph(int n, const EdgeList& red_edges, const EdgeList& blue_edges);

    int n() const { return n_; }
    Mask full() const { return n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1; }

    // Mask of c-neighbors on the opposite side.
    Mask row(Color c, int x) const { return c == Color::Red ? red_x_[x] : blue_x_[x]; }
    Mask col(Color c, int y) const { return c == Color::Red ? red_y_[y] : blue_y_[y]; }
    Mask adj(Color c, VertexRef v) const {
        return v.side == Side::X ? row(c, v.index) : col(c, v.index);
    }

    bool has_edge(Color c, int x, int y) const { return (row(c, x) & bit(y)) != 0; }
    bool has_any_edge(int x, int y) const { return ((red_x_[x] | blue_x_[x]) & bit(y)) != 0; }

    // |N_R(v) u N_B(v)|: an edge counts once regardless of colors.
    int degree(VertexRef v) const { return popcount(adj(Color::Red, v) | adj(Color::Blue, v)); }
    int min_degree() const;

    // |N_c(v) n restrict| (restrict is a mask over the opposite side).
    int color_degree(VertexRef v, Color c, Mask restrict_to) const {
        return popcount(adj(c, v) & restrict_to);
    }
    int color_degree(VertexRef v, Color c) const { return color_degree(v, c, full()); }

    // Number of c-colored edges between xs and ys.
    long long color_edge_count(Mask xs, Mask ys, Color c) const;

    long long edge_count() const;              // |E_R u E_B|
    long long color_edge_total(Color c) const; // e_c(G)

    // Canonical text format: `bigraph <n>` then `R x y` / `B x y` lines,
    // sorted (color, x, y); a doubly colored edge appears on two lines.
    std::string serialize() const;
    static ColoredBigraph parse(const std::string& text);

    ColoredBigraph transposed() const;     // swap the X and Y sides
    ColoredBigraph color_swapped() const;  // swap red and blue

    bool operator==(const ColoredBigraph&) const = default;

private:
    int n_;
    std::vector<Mask> red_x_, blue_x_;  // X -> Y adjacency
    std::vector<Mask> red_y_, blue_y_;  // derived Y -> X view
};

// Iterate over set bits of a mask.
#define BIMONO_FOR_BITS(var, mask_expr)                                             \
    for (Mask bits_##var = (mask_expr); bits_##var;)                                \
        for (int var = lowest_bit(bits_##var), once_##var = 1;                      \
             once_##var; once_##var = 0, bits_##var &= bits_##var - 1)

// Lowest-index subset of `from` with exactly k bits; throws if |from| < k.
Mask take_lowest(Mask from, int k);

}  // namespace bimono
