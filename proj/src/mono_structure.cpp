#include "bimono/mono_structure.hpp"

#include <algorithm>

#include "bimono/extremal.hpp"

namespace bimono {

namespace {

// BFS closure of the color-c subgraph from an X seed.
void component_from(const ColoredBigraph& g, Color c, int seed_x, Mask& out_x, Mask& out_y) {
    Mask rx = bit(seed_x), ry = 0, fx = rx, fy = 0;
    while (fx | fy) {
        Mask ny = 0, nx = 0;
        BIMONO_FOR_BITS(x, fx) ny |= g.row(c, x);
        BIMONO_FOR_BITS(y, fy) nx |= g.col(c, y);
        nx &= ~rx;
        ny &= ~ry;
        rx |= nx;
        ry |= ny;
        fx = nx;
        fy = ny;
    }
    out_x = rx;
    out_y = ry;
}

}  // namespace

std::vector<MonoComponent> mono_components(const ColoredBigraph& g, Color c) {
    std::vector<MonoComponent> comps;
    Mask todo = g.full();
    for (int x = 0; x < g.n(); ++x) {
        if (!(todo & bit(x)) || g.row(c, x) == 0) continue;
        Mask cx, cy;
        component_from(g, c, x, cx, cy);
        todo &= ~cx;
        comps.push_back({c, cx, cy, static_cast<int>(comps.size())});
    }
    return comps;
}

DoubleStar large_double_star(const ColoredBigraph& g, Color c) {
    DoubleStar best{{Side::X, -1}, {Side::Y, -1}, -1};
    for (int x = 0; x < g.n(); ++x) {
        int dx = popcount(g.row(c, x));
        BIMONO_FOR_BITS(y, g.row(c, x)) {
            int size = dx + popcount(g.col(c, y));
            if (size > best.size) best = {{Side::X, x}, {Side::Y, y}, size};
        }
    }
    if (best.size < 0) throw PreconditionError("large_double_star: no edges of that color");
    return best;
}

MonoComponent best_balanced_component(const ColoredBigraph& g) {
    std::vector<MonoComponent> all;
    for (Color c : {Color::Blue, Color::Red})
        for (const auto& comp : mono_components(g, c)) all.push_back(comp);
    if (all.empty()) throw PreconditionError("best_balanced_component: edgeless graph");
    auto better = [](const MonoComponent& a, const MonoComponent& b) {
        if (a.min_side() != b.min_side()) return a.min_side() > b.min_side();
        if (a.total() != b.total()) return a.total() > b.total();
        if (a.xs != b.xs) return lowest_bit(a.xs) < lowest_bit(b.xs);
        return a.color == Color::Blue && b.color == Color::Red;
    };
    return *std::min_element(all.begin(), all.end(),
                             [&](const auto& a, const auto& b) { return better(a, b); });
}

namespace {

// Kuhn's augmenting-path matching on [xs, ys] in color c.
struct Matcher {
    const ColoredBigraph& g;
    Color c;
    Mask xs, ys;
    std::vector<int> match_x, match_y;  // -1 = unmatched

    Matcher(const ColoredBigraph& g_, Color c_, Mask xs_, Mask ys_)
        : g(g_), c(c_), xs(xs_), ys(ys_), match_x(g_.n(), -1), match_y(g_.n(), -1) {}

    bool augment(int x, Mask& visited_y) {
        BIMONO_FOR_BITS(y, g.row(c, x) & ys & ~visited_y) {
            visited_y |= bit(y);
            if (match_y[y] < 0 || augment(match_y[y], visited_y)) {
                match_x[x] = y;
                match_y[y] = x;
                return true;
            }
        }
        return false;
    }

    int run() {
        int size = 0;
        BIMONO_FOR_BITS(x, xs) {
            Mask visited_y = 0;
            if (augment(x, visited_y)) ++size;
        }
        return size;
    }
};

}  // namespace

int max_matching_size(const ColoredBigraph& g, Color c, Mask xs, Mask ys) {
    return Matcher(g, c, xs, ys).run();
}

ConnectedMatching max_connected_matching(const ColoredBigraph& g, Color c) {
    ConnectedMatching best{c, -1, {}};
    for (const auto& comp : mono_components(g, c)) {
        Matcher m(g, c, comp.xs, comp.ys);
        int size = m.run();
        if (size > best.size()) {
            best.component_id = comp.id;
            best.edges.clear();
            BIMONO_FOR_BITS(x, comp.xs) {
                if (m.match_x[x] >= 0) best.edges.emplace_back(x, m.match_x[x]);
            }
        }
    }
    return best;
}

VertexCover min_cover(const ColoredBigraph& g, const MonoComponent& comp) {
    if (comp.xs == 0) throw PreconditionError("min_cover: empty component");
    Mask cx, cy;
    component_from(g, comp.color, lowest_bit(comp.xs), cx, cy);
    if (cx != comp.xs || cy != comp.ys)
        throw PreconditionError("min_cover: stale component (not a component of this graph)");

    Matcher m(g, comp.color, comp.xs, comp.ys);
    int matching = m.run();

    // Alternating reachability from unmatched X: any edge X->Y, matched Y->X.
    Mask zx = 0, zy = 0;
    BIMONO_FOR_BITS(x, comp.xs) if (m.match_x[x] < 0) zx |= bit(x);
    Mask frontier_x = zx;
    while (frontier_x) {
        Mask ny = 0;
        BIMONO_FOR_BITS(x, frontier_x) ny |= g.row(comp.color, x) & comp.ys;
        ny &= ~zy;
        zy |= ny;
        Mask nx = 0;
        BIMONO_FOR_BITS(y, ny) if (m.match_y[y] >= 0) nx |= bit(m.match_y[y]);
        nx &= ~zx;
        zx |= nx;
        frontier_x = nx;
    }
    VertexCover cover{comp.xs & ~zx, comp.ys & zy};
    if (cover.size() != matching)
        throw InternalError("min_cover: Konig equality violated (bug)");
    return cover;
}

Rat matching_bound(const Rat& delta, int n) {
    if (delta < Rat(0) || delta > Rat(1))
        throw PreconditionError("matching_bound: delta must lie in [0, 1]");
    if (delta <= Rat(2, 3)) return delta * n / 2;
    if (delta <= Rat(3, 4)) return (delta * 2 - 1) * n;
    return Rat(n, 2);
}

Rat cycle_bound(const Rat& delta) {
    if (delta < Rat(0) || delta > Rat(1))
        throw PreconditionError("cycle_bound: delta must lie in [0, 1]");
    if (delta <= Rat(2, 3)) return delta;
    if (delta <= Rat(3, 4)) return delta * 4 - 2;
    return Rat(1);
}

namespace {

// Witness with the recorded sets mapped onto the fixed red/blue reading of
// the extremal definition. `blue_role` is the color of H1 in the proof.
ExtremalWitness make_witness(Side orientation, Mask xprime, Mask part_blue_role_y1,
                             Mask part_blue_role_y2, Color blue_role, const Rat& eta) {
    ExtremalWitness w;
    w.orientation = orientation;
    w.xprime = xprime;
    if (blue_role == Color::Blue) {
        w.y1 = part_blue_role_y1;
        w.y2 = part_blue_role_y2;
    } else {
        w.y1 = part_blue_role_y2;
        w.y2 = part_blue_role_y1;
    }
    w.eta = eta;
    return w;
}

}  // namespace

StabilityOutcome matching_or_witness(const ColoredBigraph& g, const Rat& eta) {
    const int n = g.n();
    if (Rat(g.min_degree()) * 1 <= (Rat(3, 4) + eta) * n)
        throw PreconditionError("matching_or_witness: need delta(G) > (3/4+eta)n");

    ConnectedMatching red = max_connected_matching(g, Color::Red);
    ConnectedMatching blue = max_connected_matching(g, Color::Blue);
    ConnectedMatching& best = blue.size() >= red.size() ? blue : red;
    std::int64_t need = rat_ceil((Rat(1, 2) + eta) * n);
    if (best.size() >= need) return {best, std::nullopt};

    // Witness construction along the proof. H1: largest component (total
    // order) with both sides >= n/2, over both colors.
    std::optional<MonoComponent> h1;
    for (Color c : {Color::Blue, Color::Red}) {
        for (const auto& comp : mono_components(g, c)) {
            if (2 * comp.x_size() < n || 2 * comp.y_size() < n) continue;
            if (!h1 || comp.total() > h1->total()) h1 = comp;
        }
    }
    if (!h1)
        throw BelowRegimeError(
            "matching_or_witness: no monochromatic component with both sides >= n/2 "
            "(below n0 regime)");

    Color blue_role = h1->color;
    Mask x1 = h1->xs, y1 = h1->ys;
    Mask x2 = g.full() & ~x1, y2 = g.full() & ~y1;
    Rat half_eta_n = (Rat(1, 2) + eta) * n;
    ExtremalWitness w;
    if (Rat(popcount(y1)) < half_eta_n) {
        w = make_witness(Side::X, x1, y1, y2, blue_role, eta * 2);
    } else if (Rat(popcount(x1)) < half_eta_n) {
        w = make_witness(Side::Y, y1, x1, x2, blue_role, eta * 2);
    } else {
        VertexCover s = min_cover(g, *h1);
        Mask x1p = x1 & ~s.sx, y1p = y1 & ~s.sy;
        if (x1p == 0 || y1p == 0)
            throw BelowRegimeError("matching_or_witness: cover swallowed a side of H1");
        // H2: the red-role component covering X1' u Y1'.
        std::optional<MonoComponent> h2;
        for (const auto& comp : mono_components(g, other(blue_role))) {
            if ((comp.xs & x1p) == x1p && (comp.ys & y1p) == y1p) {
                h2 = comp;
                break;
            }
        }
        if (!h2)
            throw BelowRegimeError(
                "matching_or_witness: no single component of the other color covers X1' u Y1' "
                "(below n0 regime)");
        VertexCover t = min_cover(g, *h2);
        Mask ty_prime = t.sy & ~s.sy;
        if ((s.sy | ty_prime) != g.full())
            throw BelowRegimeError(
                "matching_or_witness: S_Y u T_Y' does not exhaust Y (below n0 regime)");
        w = make_witness(Side::X, x1p, s.sy, ty_prime, blue_role, eta * 2);
    }
    if (!verify_witness(g, w))
        throw BelowRegimeError(
            "matching_or_witness: constructed witness fails verification at 2*eta "
            "(below n0 regime)");
    return {std::nullopt, w};
}

}  // namespace bimono
