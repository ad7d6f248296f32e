#include "bimono/extremal.hpp"

#include <algorithm>
#include <array>

#include "json.hpp"

namespace bimono {

namespace {

void check_witness_shape(const ColoredBigraph& g, const ExtremalWitness& w) {
    Mask full = g.full();
    if ((w.xprime & ~full) || (w.y1 & ~full) || (w.y2 & ~full))
        throw PreconditionError("witness invalid: set exceeds vertex range");
    if (w.y1 & w.y2) throw PreconditionError("witness invalid: y1 and y2 overlap");
    if ((w.y1 | w.y2) != full) throw PreconditionError("witness invalid: {y1, y2} not a partition");
}

bool verify_witness_oriented_x(const ColoredBigraph& g, const ExtremalWitness& w) {
    const int n = g.n();
    // Integer sets against a possibly half-integral bound: floor keeps the
    // clause satisfiable at odd n (|Y_i| <= floor(n/2) for one side always).
    auto size_floor = rat_floor((Rat(1, 2) - w.eta) * n);
    if (popcount(w.xprime) < size_floor) return false;
    if (popcount(w.y1) < size_floor) return false;
    if (popcount(w.y2) < size_floor) return false;
    Rat cap = w.eta * n * n;
    if (Rat(g.color_edge_count(w.xprime, w.y1, Color::Red)) > cap) return false;
    if (Rat(g.color_edge_count(w.xprime, w.y2, Color::Blue)) > cap) return false;
    return true;
}

}  // namespace

bool verify_witness(const ColoredBigraph& g, const ExtremalWitness& w) {
    if (w.orientation == Side::X) {
        check_witness_shape(g, w);
        return verify_witness_oriented_x(g, w);
    }
    ColoredBigraph t = g.transposed();
    ExtremalWitness wx{Side::X, w.xprime, w.y1, w.y2, w.eta};
    check_witness_shape(t, wx);
    return verify_witness_oriented_x(t, wx);
}

std::optional<ExtremalWitness> find_witness(const ColoredBigraph& g, const Rat& eta) {
    std::vector<ExtremalWitness> candidates;
    auto push = [&](Side orient, Mask xp, Mask part_a, Mask part_b, Color blue_role) {
        // part_a is the side dominated by blue_role; map onto the fixed
        // red/blue reading of the definition.
        Mask y1 = blue_role == Color::Blue ? part_a : part_b;
        Mask y2 = blue_role == Color::Blue ? part_b : part_a;
        candidates.push_back({orient, xp, y1, y2, eta});
    };
    Mask full = g.full();
    for (Color c : {Color::Blue, Color::Red}) {
        for (const auto& comp : mono_components(g, c)) {
            push(Side::X, comp.xs, comp.ys, full & ~comp.ys, c);
            push(Side::Y, comp.ys, comp.xs, full & ~comp.xs, c);
            // Cover-based triple from the stability proof.
            VertexCover s = min_cover(g, comp);
            Mask x1p = comp.xs & ~s.sx;
            if (x1p && s.sy) push(Side::X, x1p, full & ~s.sy, s.sy, other(c));
            Mask y1p = comp.ys & ~s.sy;
            if (y1p && s.sx) push(Side::Y, y1p, full & ~s.sx, s.sx, other(c));
        }
    }
    // Trivial half-splits (cover the edgeless and near-edgeless cases).
    Mask low = take_lowest(full, (g.n() + 1) / 2);
    for (Side orient : {Side::X, Side::Y}) {
        push(orient, full, low, full & ~low, Color::Blue);
        push(orient, full, low, full & ~low, Color::Red);
    }
    for (const auto& w : candidates)
        if (verify_witness(g, w)) return w;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Shared precondition helpers (exact rationals throughout).

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw PreconditionError(what);
}

void check_lemma_params(const Rat& gamma, const Rat& theta, int n) {
    require(theta >= Rat(0) && gamma > Rat(0) && gamma <= Rat(1, 4),
            "need 0 <= theta and 0 < gamma <= 1/4");
    require(theta * 64 < gamma * gamma, "need 8*sqrt(theta) < gamma");
    require(Rat(n) * gamma >= Rat(3), "need n >= 3/gamma");
}

// Cycle of length exactly 2m inside the color-c subgraph restricted to
// [avail_x, avail_y]: a c-edge plus a Hamiltonian path between its ends.
std::optional<CycleResult> ham_cycle_in(const ColoredBigraph& g, Color c, Mask avail_x,
                                        Mask avail_y, int m) {
    if (popcount(avail_x) < m || popcount(avail_y) < m) return std::nullopt;
    int tried = 0;
    BIMONO_FOR_BITS(x, avail_x) {
        BIMONO_FOR_BITS(y, g.row(c, x) & avail_y) {
            if (++tried > 32) return std::nullopt;
            Mask xs = bit(x) | take_lowest(avail_x & ~bit(x), m - 1);
            Mask ys = bit(y) | take_lowest(avail_y & ~bit(y), m - 1);
            auto path = ham_path_cover(g, c, xs, ys, {Side::X, x}, {Side::Y, y});
            if (path) {
                CycleResult cyc{c, *path};
                validate_cycle(g, cyc);
                return cyc;
            }
        }
    }
    return std::nullopt;
}

}  // namespace

BiConnectedPair long_path_prop(const ColoredBigraph& g, Mask xprime, Mask yprime,
                               const RouteParams& params, Color color) {
    const int n = g.n();
    const Rat gamma = params.gamma, theta = params.theta;
    check_lemma_params(gamma, theta, n);
    Rat size_floor = (Rat(1, 2) - gamma / 8) * n;
    require(Rat(popcount(xprime)) >= size_floor, "long_path_prop: |X'| < (1/2 - gamma/8)n");
    require(Rat(popcount(yprime)) >= size_floor, "long_path_prop: |Y'| < (1/2 - gamma/8)n");
    require(Rat(g.color_edge_count(xprime, yprime, other(color))) <= theta * n * n,
            "long_path_prop: e_other(X', Y') > theta*n^2");
    require(Rat(g.min_degree()) >= (Rat(3, 4) + gamma) * n,
            "long_path_prop: delta(G) < (3/4 + gamma)n");

    Rat x_thresh = Rat(popcount(yprime)) - Rat(n, 2) + gamma * n / 2;
    Rat y_thresh = Rat(popcount(xprime)) - Rat(n, 2) + gamma * n / 2;
    Mask xs_low = 0, ys_low = 0;
    BIMONO_FOR_BITS(x, xprime) {
        if (Rat(popcount(g.row(color, x) & yprime)) <= x_thresh) xs_low |= bit(x);
    }
    BIMONO_FOR_BITS(y, yprime) {
        if (Rat(popcount(g.col(color, y) & xprime)) <= y_thresh) ys_low |= bit(y);
    }
    if (Rat(popcount(xs_low)) > theta * n * 4 || Rat(popcount(ys_low)) > theta * n * 4)
        throw InternalError("long_path_prop: |X_S| or |Y_S| exceeds 4*theta*n (bug)");
    Mask px = xprime & ~xs_low, py = yprime & ~ys_low;
    int m = std::min(popcount(px), popcount(py));
    return {take_lowest(px, m), take_lowest(py, m), color, xs_low, ys_low};
}

PathResult extract_ham_path(const ColoredBigraph& g, const BiConnectedPair& pair, Mask xstar_set,
                            Mask ystar_set, VertexRef x, VertexRef y, const RouteParams& params) {
    require((xstar_set & ~pair.xs) == 0, "extract_ham_path: X* not inside the pair");
    require((ystar_set & ~pair.ys) == 0, "extract_ham_path: Y* not inside the pair");
    require(x.side == Side::X && (xstar_set & bit(x.index)), "extract_ham_path: x not in X*");
    require(y.side == Side::Y && (ystar_set & bit(y.index)), "extract_ham_path: y not in Y*");
    require(popcount(xstar_set) == popcount(ystar_set), "extract_ham_path: |X*| != |Y*|");
    require(Rat(popcount(xstar_set)) >= (Rat(1, 2) - params.gamma / 4) * g.n(),
            "extract_ham_path: |X*| < (1/2 - gamma/4)n");
    auto seq = ham_path_cover(g, pair.color, xstar_set, ystar_set, x, y);
    if (!seq) {
        BipartiteView view = make_view(g, pair.color, xstar_set, ystar_set);
        if (berge_check(view))
            throw InternalError("extract_ham_path: Berge condition holds but no path found (bug)");
        throw BelowRegimeError(
            "extract_ham_path: no Hamiltonian path; pair hypotheses too weak at this n");
    }
    PathResult p{pair.color, *seq};
    validate_path(g, p);
    return p;
}

CycleResult big_part_prop(const ColoredBigraph& g, Mask xprime, Mask yprime,
                          const RouteParams& params) {
    const int n = g.n();
    const Rat gamma = params.gamma, theta = params.theta;
    const Color blue = Color::Blue;
    check_lemma_params(gamma, theta, n);
    require(Rat(4 * popcount(xprime)) >= Rat(3 * n), "big_part_prop: |X'| < 3n/4");
    require(Rat(2 * popcount(yprime)) >= Rat(n), "big_part_prop: |Y'| < n/2");
    require(Rat(popcount(yprime)) <= (Rat(1, 2) + theta) * n, "big_part_prop: |Y'| > (1/2+theta)n");
    require(Rat(g.color_edge_count(xprime, yprime, Color::Red)) <= theta * n * n,
            "big_part_prop: e_R(X', Y') > theta*n^2");
    require(Rat(g.min_degree()) >= (Rat(3, 4) + gamma) * n,
            "big_part_prop: delta(G) < (3/4 + gamma)n");
    Rat delta_b_in = Rat(n + 1);
    BIMONO_FOR_BITS(y, yprime) delta_b_in =
        std::min(delta_b_in, Rat(popcount(g.col(blue, y) & xprime)));
    require(delta_b_in >= gamma * n, "big_part_prop: delta_B(Y', X') < gamma*n");

    Mask xs_low = 0;
    BIMONO_FOR_BITS(x, xprime) {
        if (Rat(popcount(g.row(blue, x) & yprime)) <= (Rat(1, 4) + gamma * 3 / 4) * n)
            xs_low |= bit(x);
    }
    if (Rat(popcount(xs_low)) * gamma > theta * n * 4)
        throw InternalError("big_part_prop: |X_S| > (4*theta/gamma)n (bug)");
    Mask x_large = xprime & ~xs_low;
    Mask ys_low = 0;
    Rat y_thresh = Rat(popcount(x_large)) - Rat(n, 2) + gamma * n * 3 / 4;
    BIMONO_FOR_BITS(y, yprime) {
        if (Rat(popcount(g.col(blue, y) & x_large)) <= y_thresh) ys_low |= bit(y);
    }
    if (Rat(popcount(ys_low)) > theta * n * 4)
        throw InternalError("big_part_prop: |Y_S| > 4*theta*n (bug)");
    Mask y_large = yprime & ~ys_low;

    const int m_target = (n + 1) / 2;
    if (ys_low == 0) {
        auto cyc = ham_cycle_in(g, blue, x_large, y_large, m_target);
        if (!cyc) throw InternalError("big_part_prop: closure failed with empty Y_S (bug)");
        return *cyc;
    }

    // Greedy blue path P covering Y_S: x_i v_i x_i' v_i' ... with v_i in Y_S
    // and the connector v_i' in Y_L.
    std::vector<int> y_small;
    BIMONO_FOR_BITS(y, ys_low) y_small.push_back(y);
    int t = static_cast<int>(y_small.size());
    std::vector<VertexRef> p;
    Mask used_x = 0, used_y = 0;
    auto pick = [&](Mask cand) -> int {
        if (!cand) throw BelowRegimeError("big_part_prop: greedy cover path ran out of choices");
        return lowest_bit(cand);
    };
    std::vector<int> x_in(t), x_out(t);
    for (int i = 0; i < t; ++i) {
        x_in[i] = pick(g.col(blue, y_small[i]) & x_large & ~used_x);
        used_x |= bit(x_in[i]);
        x_out[i] = pick(g.col(blue, y_small[i]) & x_large & ~used_x);
        used_x |= bit(x_out[i]);
    }
    // connectors between x_out[i] and x_in[i+1]; the last one dangles
    std::vector<int> y_conn(t);
    for (int i = 0; i < t; ++i) {
        Mask cand = g.row(blue, x_out[i]) & y_large & ~used_y;
        if (i + 1 < t) cand &= g.row(blue, x_in[i + 1]);
        y_conn[i] = pick(cand);
        used_y |= bit(y_conn[i]);
    }
    for (int i = 0; i < t; ++i) {
        p.push_back({Side::X, x_in[i]});
        p.push_back({Side::Y, y_small[i]});
        p.push_back({Side::X, x_out[i]});
        p.push_back({Side::Y, y_conn[i]});
    }
    validate_path(g, PathResult{blue, p});
    int x1 = x_in[0], vt = y_conn[t - 1];

    RouteParams inner{gamma, params.eta, theta};
    Mask avail_x = (x_large & ~used_x) | bit(x1);
    Mask avail_y = (yprime & ~used_y & ~ys_low) | bit(vt);
    BiConnectedPair pair = long_path_prop(g, avail_x, avail_y, inner, blue);
    Mask px = pair.xs | bit(x1), py = pair.ys | bit(vt);  // keep the stitch points
    int m = std::min(popcount(px), popcount(py));
    Mask xs = bit(x1) | take_lowest(px & ~bit(x1), m - 1);
    Mask ys = bit(vt) | take_lowest(py & ~bit(vt), m - 1);
    auto closing = ham_path_cover(g, blue, xs, ys, {Side::Y, vt}, {Side::X, x1});
    if (!closing) throw InternalError("big_part_prop: closure path not found (bug)");
    std::vector<VertexRef> cyc_seq = p;
    cyc_seq.insert(cyc_seq.end(), closing->begin() + 1, closing->end() - 1);
    CycleResult cyc{blue, cyc_seq};
    validate_cycle(g, cyc);
    if (cyc.length() < 2 * ((n + 1) / 2))
        throw InternalError("big_part_prop: cycle shorter than 2*ceil(n/2) (bug)");
    return cyc;
}

// ---------------------------------------------------------------------------
// Menger separator via unit-capacity vertex max-flow.

namespace {

struct FlowNet {
    // node 2v = v_in, 2v+1 = v_out over 2n combined vertices; then source, sink
    int nodes;
    std::vector<std::vector<int>> cap;

    explicit FlowNet(int combined) : nodes(2 * combined + 2) {
        cap.assign(nodes, std::vector<int>(nodes, 0));
    }
    int src() const { return nodes - 2; }
    int dst() const { return nodes - 1; }

    int augment() {  // one BFS augmenting path of value 1
        std::vector<int> prev(nodes, -1);
        std::vector<int> queue{src()};
        prev[src()] = src();
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            for (int w = 0; w < nodes; ++w) {
                if (prev[w] < 0 && cap[v][w] > 0) {
                    prev[w] = v;
                    queue.push_back(w);
                }
            }
        }
        if (prev[dst()] < 0) return 0;
        for (int v = dst(); v != src(); v = prev[v]) {
            cap[prev[v]][v] -= 1;
            cap[v][prev[v]] += 1;
        }
        return 1;
    }

    std::vector<char> seen_cache_;
    void cache_reachable() {
        seen_cache_.assign(nodes, 0);
        std::vector<int> queue{src()};
        seen_cache_[src()] = 1;
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            for (int w = 0; w < nodes; ++w) {
                if (!seen_cache_[w] && cap[v][w] > 0) {
                    seen_cache_[w] = 1;
                    queue.push_back(w);
                }
            }
        }
    }
    bool seen_out(int v) const { return seen_cache_[2 * v + 1]; }
};

}  // namespace

SeparatorResult separator_partition(const ColoredBigraph& g, const BiConnectedPair& pair_a,
                                    const BiConnectedPair& pair_b) {
    const int n = g.n();
    Mask ax = pair_a.xs, ay = pair_a.ys, bx = pair_b.xs, by = pair_b.ys;
    if ((ax & bx) || (ay & by)) throw PreconditionError("separator_partition: pairs overlap");

    // combined index: v in [0, n) = X vertex, [n, 2n) = Y vertex
    const int inf = 4 * n;
    FlowNet net(2 * n);
    auto vin = [](int v) { return 2 * v; };
    auto vout = [](int v) { return 2 * v + 1; };
    for (int v = 0; v < 2 * n; ++v) net.cap[vin(v)][vout(v)] = 1;
    for (int x = 0; x < n; ++x) {
        BIMONO_FOR_BITS(y, g.row(Color::Red, x)) {
            net.cap[vout(x)][vin(n + y)] = inf;
            net.cap[vout(n + y)][vin(x)] = inf;
        }
    }
    BIMONO_FOR_BITS(x, ax) net.cap[net.src()][vin(x)] = inf;
    BIMONO_FOR_BITS(y, ay) net.cap[net.src()][vin(n + y)] = inf;
    BIMONO_FOR_BITS(x, bx) net.cap[vout(x)][net.dst()] = inf;
    BIMONO_FOR_BITS(y, by) net.cap[vout(n + y)][net.dst()] = inf;

    int flow = 0;
    while (flow < 2 && net.augment()) ++flow;
    if (flow >= 2) return RedCycleSignal{};

    HatPartition hats;
    Mask forbidden_x = 0, forbidden_y = 0;
    if (flow == 1) {
        net.cache_reachable();
        int cut = -1;
        for (int v = 0; v < 2 * n; ++v)
            if (net.seen_cache_[vin(v)] && !net.seen_out(v)) cut = v;
        if (cut < 0) throw InternalError("separator_partition: flow 1 but no cut vertex (bug)");
        hats.w_r_on_y = cut >= n;
        hats.w_r = bit(cut >= n ? cut - n : cut);
        (hats.w_r_on_y ? forbidden_y : forbidden_x) = hats.w_r;
    }

    // Red components of G - W_R; a component must not touch both pairs.
    Mask avail_x = g.full() & ~forbidden_x, avail_y = g.full() & ~forbidden_y;
    Mask todo_x = avail_x, todo_y = avail_y;
    std::vector<std::pair<Mask, Mask>> comps;
    auto closure = [&](Mask seed_x, Mask seed_y, Mask& out_x, Mask& out_y) {
        Mask rx = seed_x, ry = seed_y, fx = seed_x, fy = seed_y;
        while (fx | fy) {
            Mask ny = 0, nx = 0;
            BIMONO_FOR_BITS(x, fx) ny |= g.row(Color::Red, x);
            BIMONO_FOR_BITS(y, fy) nx |= g.col(Color::Red, y);
            nx &= avail_x & ~rx;
            ny &= avail_y & ~ry;
            rx |= nx;
            ry |= ny;
            fx = nx;
            fy = ny;
        }
        out_x = rx;
        out_y = ry;
    };
    Mask group1_x = 0, group1_y = 0, group2_x = 0, group2_y = 0;
    while (todo_x | todo_y) {
        Mask cx, cy;
        if (todo_x)
            closure(bit(lowest_bit(todo_x)), 0, cx, cy);
        else
            closure(0, bit(lowest_bit(todo_y)), cx, cy);
        todo_x &= ~cx;
        todo_y &= ~cy;
        bool touches_a = (cx & ax) || (cy & ay);
        bool touches_b = (cx & bx) || (cy & by);
        if (touches_a && touches_b)
            throw InternalError("separator_partition: component crosses the separator (bug)");
        if (touches_a) {
            group1_x |= cx;
            group1_y |= cy;
        } else if (touches_b) {
            group2_x |= cx;
            group2_y |= cy;
        } else {
            // balance leftover components
            if (popcount(group1_x | group1_y) <= popcount(group2_x | group2_y)) {
                group1_x |= cx;
                group1_y |= cy;
            } else {
                group2_x |= cx;
                group2_y |= cy;
            }
        }
    }
    hats.hat_x1 = group1_x;
    hats.hat_x2 = group2_x;
    hats.hat_y2 = group1_y;  // pair A = (X1*, Y2*)
    hats.hat_y1 = group2_y;
    return hats;
}

// ---------------------------------------------------------------------------
// The extremal-case pipeline.

namespace {

struct RouteWork {
    const ColoredBigraph& g;
    RouteParams params;
    std::vector<std::string> trace;

    // Produces the main cycle (>= 2*ceil(n/2) except in the last sub-case)
    // and optionally a dedicated path (when the cycle alone is too short).
    CycleResult cycle{};
    std::optional<PathResult> path_override;

    void run(Mask x1, Mask y1, Mask y2);

private:
    void branch_d(Mask x1p, Mask x2p, Mask y1p, Mask y2p);
    void hat_cases(const HatPartition& hats);
    CycleResult need_cycle(std::optional<CycleResult> c, const char* where) {
        if (!c) throw BelowRegimeError(std::string(where) + ": cycle closure failed at this n");
        return *c;
    }
};

void RouteWork::run(Mask x1, Mask y1, Mask y2) {
    const int n = g.n();
    const Rat gamma = params.gamma, eta = params.eta;
    Mask full = g.full();
    Rat s = Rat(popcount(x1)) - Rat(n, 2);

    Rat y_thresh = s + gamma * n;
    Mask y1s = 0, y2s = 0;
    BIMONO_FOR_BITS(y, y1) if (Rat(popcount(g.col(Color::Blue, y) & x1)) <= y_thresh) y1s |= bit(y);
    BIMONO_FOR_BITS(y, y2) if (Rat(popcount(g.col(Color::Red, y) & x1)) <= y_thresh) y2s |= bit(y);
    if (Rat(popcount(y1s)) > eta * n * 4 || Rat(popcount(y2s)) > eta * n * 4)
        throw InternalError("extremal_route: |Y_i^S| > 4*eta*n (bug)");
    Mask y1p = (y1 & ~y1s) | y2s;
    Mask y2p = full & ~y1p;
    if (popcount(y1p) < popcount(y2p)) {
        trace.push_back("swap-colors");
        ColoredBigraph swapped = g.color_swapped();
        RouteWork inner{swapped, params, trace};
        inner.run(x1, y2, y1);
        inner.cycle.color = other(inner.cycle.color);
        if (inner.path_override) inner.path_override->color = other(inner.path_override->color);
        cycle = inner.cycle;
        path_override = inner.path_override;
        trace = inner.trace;
        return;
    }

    Mask x2 = full & ~x1;
    Mask x1s = 0, x2s = 0;
    BIMONO_FOR_BITS(x, x1) if (Rat(popcount(g.row(Color::Blue, x) & y1p)) <= gamma * n)
        x1s |= bit(x);
    BIMONO_FOR_BITS(x, x2) if (Rat(popcount(g.row(Color::Red, x) & y1p)) <= gamma * n)
        x2s |= bit(x);
    if (Rat(popcount(x1s)) > eta * n * 20)
        throw InternalError("extremal_route: |X_1^S| > 20*eta*n (bug)");
    Mask a2s = 0;
    int have = popcount(x1 & ~x1s);
    if (Rat(2 * have) < Rat(n)) {
        int want = static_cast<int>(rat_floor(Rat(n, 2) - have));
        a2s = take_lowest(x2s, std::min(want, popcount(x2s)));
    }
    if (Rat(popcount(a2s)) > eta * n * 21)
        throw InternalError("extremal_route: |A_2^S| > 21*eta*n (bug)");
    Mask x1p = (x1 & ~x1s) | a2s;
    Mask x2p = full & ~x1p;

    const int m_target = (n + 1) / 2;
    if (Rat(4 * popcount(x1p)) >= Rat(3 * n)) {
        trace.push_back("a:big-part");
        cycle = big_part_prop(g, x1p, y1p, {gamma, eta, eta * 9});
        return;
    }
    if (Rat(2 * popcount(x1p)) >= Rat(n)) {
        trace.push_back("b:long-path");
        BiConnectedPair pair = long_path_prop(g, x1p, y1p, {gamma, eta, eta * 9}, Color::Blue);
        cycle = need_cycle(ham_cycle_in(g, Color::Blue, pair.xs, pair.ys, m_target), "branch b");
        return;
    }

    // |X_1'| < n/2, so |X_2'| > n/2.
    long long blue_cross = g.color_edge_count(x2p, y1p, Color::Blue);
    int k = static_cast<int>(rat_ceil(eta * n * 24));
    if (Rat(blue_cross) >= eta * n * n * 12 && k >= 2) {
        trace.push_back("c:erdos-gallai");
        // Path with k Y-vertices, endpoints in Y, from a long blue cycle in
        // [X_2', Y_1']: combined indices X first then Y.
        std::vector<int> xl, yl;
        BIMONO_FOR_BITS(x, x2p) xl.push_back(x);
        BIMONO_FOR_BITS(y, y1p) yl.push_back(y);
        SimpleGraph h(static_cast<int>(xl.size() + yl.size()));
        for (size_t i = 0; i < xl.size(); ++i)
            for (size_t j = 0; j < yl.size(); ++j)
                if (g.has_edge(Color::Blue, xl[i], yl[j]))
                    h.add_edge(static_cast<int>(i), static_cast<int>(xl.size() + j));
        std::vector<int> cyc = erdos_gallai_cycle(h, 2 * k - 1);
        // rotate so it starts on a Y vertex, then cut after k Y's
        size_t start = 0;
        while (cyc[start] < static_cast<int>(xl.size())) ++start;
        std::vector<VertexRef> p;
        for (size_t i = 0; i < cyc.size() && static_cast<int>(p.size()) < 2 * k - 1; ++i) {
            int v = cyc[(start + i) % cyc.size()];
            p.push_back(v < static_cast<int>(xl.size())
                            ? VertexRef{Side::X, xl[v]}
                            : VertexRef{Side::Y, yl[v - xl.size()]});
        }
        if (p.back().side != Side::Y) p.pop_back();
        Mask p_x = 0, p_y = 0;
        for (auto v : p) (v.side == Side::X ? p_x : p_y) |= bit(v.index);
        int y_end = p.back().index, y_start = p.front().index;
        Mask cand = g.col(Color::Blue, y_end) & x1p;
        if (!cand) throw BelowRegimeError("branch c: no blue edge from the path end into X_1'");
        int x_ext = lowest_bit(cand);
        p.push_back({Side::X, x_ext});
        BiConnectedPair pair = long_path_prop(g, x1p, y1p, {gamma, eta, eta * 9}, Color::Blue);
        Mask avail_x = (pair.xs & ~p_x) | bit(x_ext);
        Mask avail_y = (pair.ys & ~p_y) | bit(y_start);
        int m = std::min(popcount(avail_x), popcount(avail_y));
        Mask xs = bit(x_ext) | take_lowest(avail_x & ~bit(x_ext), m - 1);
        Mask ys = bit(y_start) | take_lowest(avail_y & ~bit(y_start), m - 1);
        auto closing = ham_path_cover(g, Color::Blue, xs, ys, {Side::X, x_ext}, {Side::Y, y_start});
        if (!closing) throw BelowRegimeError("branch c: closure path not found at this n");
        std::vector<VertexRef> seq = p;
        seq.insert(seq.end(), closing->begin() + 1, closing->end() - 1);
        cycle = CycleResult{Color::Blue, seq};
        validate_cycle(g, cycle);
        if (cycle.length() < 2 * m_target)
            throw BelowRegimeError("branch c: cycle shorter than 2*ceil(n/2)");
        return;
    }
    branch_d(x1p, x2p, y1p, y2p);
}

void RouteWork::branch_d(Mask x1p, Mask x2p, Mask y1p, Mask y2p) {
    const int n = g.n();
    trace.push_back("d:red-pairs");
    BiConnectedPair pair_b =
        long_path_prop(g, x2p, y1p, {params.gamma, params.eta, params.eta * 12}, Color::Red);
    BiConnectedPair pair_a =
        long_path_prop(g, x1p, y2p, {params.gamma, params.eta, params.eta * 9}, Color::Red);
    SeparatorResult sep = separator_partition(g, pair_a, pair_b);
    if (std::holds_alternative<RedCycleSignal>(sep)) {
        trace.push_back("d:red-cycle-signal");
        if (n > kDefaultSearchCap)
            throw BelowRegimeError("branch d: red-cycle signal beyond the exact-search cap");
        auto cyc = longest_cycle_in_color(g, Color::Red);
        if (!cyc || cyc->length() < 2 * ((n + 1) / 2))
            throw InternalError("branch d: signalled red cycle not found (bug)");
        cycle = *cyc;
        return;
    }
    hat_cases(std::get<HatPartition>(sep));
}

void RouteWork::hat_cases(const HatPartition& hats) {
    const int n = g.n();
    const int m_up = (n + 1) / 2, m_down = n / 2;
    Mask hx[2] = {hats.hat_x1, hats.hat_x2};
    Mask hy[2] = {hats.hat_y1, hats.hat_y2};
    for (int i = 0; i < 2; ++i) {
        if (2 * popcount(hx[i]) >= n && 2 * popcount(hy[i]) >= n) {
            trace.push_back("d:blue-hat");
            cycle = need_cycle(ham_cycle_in(g, Color::Blue, hx[i], hy[i], m_up), "blue hat");
            return;
        }
    }
    // Relabel so |hat X_1| >= (n+1)/2 (then |hat Y_1| <= (n-1)/2).
    int big = 2 * popcount(hx[0]) > n ? 0 : 1;
    Mask hx1 = hx[big], hy1 = hy[big], hx2 = hx[1 - big], hy2 = hy[1 - big];
    if (2 * popcount(hx1) <= n)
        throw BelowRegimeError("branch d: no X-hat exceeds n/2 (below regime)");

    int wr = hats.w_r ? lowest_bit(hats.w_r) : -1;
    auto wr_fallback = [&]() {
        if (wr < 0 || !hats.w_r_on_y)
            throw BelowRegimeError("branch d: |Y-hat 2| < n/2 without a Y-side separator vertex");
        if (2 * popcount(g.col(Color::Red, wr) & hx1) >= n / 4) {
            trace.push_back("d:wr-red");
            cycle = need_cycle(ham_cycle_in(g, Color::Red, hx1, hy2 | bit(wr), m_up), "w_R red");
        } else {
            trace.push_back("d:wr-blue");
            cycle = need_cycle(ham_cycle_in(g, Color::Blue, hx1, hy1 | bit(wr), m_up), "w_R blue");
        }
    };

    int blue_matching = max_matching_size(g, Color::Blue, hx1, hy2);
    if (blue_matching >= 2) {
        trace.push_back("d:blue-matching-2");
        // Join the two all-blue blocks through two independent blue edges.
        std::vector<std::pair<int, int>> picked;
        BIMONO_FOR_BITS(x, hx1) {
            if (picked.size() == 2) break;
            Mask cand = g.row(Color::Blue, x) & hy2;
            for (auto& [px, py] : picked) cand &= ~bit(py);
            if (cand) picked.emplace_back(x, lowest_bit(cand));
        }
        if (picked.size() < 2) throw InternalError("branch d: matching edges vanished (bug)");
        auto [a1, b1] = picked[0];
        auto [a2, b2] = picked[1];
        int p = std::min(popcount(hx1), popcount(hy1) + 1);
        int q = std::min(popcount(hy2), popcount(hx2) + 1);
        Mask u1 = bit(a1) | bit(a2) | take_lowest(hx1 & ~bit(a1) & ~bit(a2), p - 2);
        Mask v1 = take_lowest(hy1, p - 1);
        Mask v2 = bit(b1) | bit(b2) | take_lowest(hy2 & ~bit(b1) & ~bit(b2), q - 2);
        Mask u2 = take_lowest(hx2, q - 1);
        auto path1 = ham_path_cover(g, Color::Blue, u1, v1, {Side::X, a1}, {Side::X, a2});
        auto path2 = ham_path_cover(g, Color::Blue, u2, v2, {Side::Y, b2}, {Side::Y, b1});
        if (!path1 || !path2)
            throw BelowRegimeError("branch d: block cover paths not found at this n");
        std::vector<VertexRef> seq = *path1;
        seq.insert(seq.end(), path2->begin(), path2->end());
        cycle = CycleResult{Color::Blue, seq};
        validate_cycle(g, cycle);
        if (cycle.length() < 2 * m_up)
            throw BelowRegimeError("branch d: joined blue cycle shorter than 2*ceil(n/2)");
        return;
    }

    if (blue_matching == 0) {
        if (2 * popcount(hy2) >= n) {
            trace.push_back("d:red-block");
            cycle = need_cycle(ham_cycle_in(g, Color::Red, hx1, hy2, m_up), "red block");
            return;
        }
        wr_fallback();
        return;
    }

    // blue matching exactly 1: the one case where only 2*floor(n/2) is
    // promised for the cycle; the path comes from the blue join through the
    // single cover vertex.
    trace.push_back("d:blue-matching-1");
    int zx = -1, zy = -1;
    bool z_on_x = false;
    {  // the cover vertex is whichever side meets every blue edge
        Mask xs_with = 0, ys_with = 0;
        BIMONO_FOR_BITS(x, hx1) {
            Mask r = g.row(Color::Blue, x) & hy2;
            if (r) {
                xs_with |= bit(x);
                ys_with |= r;
            }
        }
        if (popcount(xs_with) == 1) {
            z_on_x = true;
            zx = lowest_bit(xs_with);
        } else if (popcount(ys_with) == 1) {
            z_on_x = false;
            zy = lowest_bit(ys_with);
        } else {
            throw InternalError("branch d: matching 1 but no single cover vertex (bug)");
        }
    }

    // Blue path: block1 + z + block2.
    {
        Mask bx1 = hx1, by1 = hy1, bx2 = hx2, by2 = hy2;
        std::vector<VertexRef> seq;
        if (!z_on_x) {
            Mask cand = g.col(Color::Blue, zy) & bx1;
            int xj = cand ? lowest_bit(cand) : -1;
            if (xj < 0) throw InternalError("branch d: cover vertex lost its blue edge (bug)");
            int p = std::min(popcount(bx1), popcount(by1));
            Mask u1 = bit(xj) | take_lowest(bx1 & ~bit(xj), p - 1);
            Mask v1 = take_lowest(by1, p);
            auto part1 = ham_path_cover(g, Color::Blue, u1, v1, {Side::Y, lowest_bit(v1)},
                                        {Side::X, xj});
            Mask cand2 = g.col(Color::Blue, zy) & bx2;
            int q = std::min(popcount(bx2), popcount(by2 & ~bit(zy)));
            if (part1 && cand2 && q >= 1) {
                int x2j = lowest_bit(cand2);
                Mask u2 = bit(x2j) | take_lowest(bx2 & ~bit(x2j), q - 1);
                Mask v2 = take_lowest(by2 & ~bit(zy), q);
                auto part2 = ham_path_cover(g, Color::Blue, u2, v2, {Side::X, x2j},
                                            {Side::Y, lowest_bit(v2)});
                if (part2) {
                    seq = *part1;
                    seq.push_back({Side::Y, zy});
                    seq.insert(seq.end(), part2->begin(), part2->end());
                }
            }
        } else {
            // block1 path ending at a blue neighbor of z, then z, then its
            // blue edge into Y-hat 2, then through block2.
            Mask cand = g.row(Color::Blue, zx) & by2;
            int yj = cand ? lowest_bit(cand) : -1;
            if (yj < 0) throw InternalError("branch d: cover vertex lost its blue edge (bug)");
            Mask ye_cand = g.row(Color::Blue, zx) & by1;
            int p = std::min(popcount(bx1 & ~bit(zx)), popcount(by1));
            int q = std::min(popcount(bx2), popcount(by2 & ~bit(yj)));
            if (ye_cand && p >= 1 && q >= 1) {
                int ye = lowest_bit(ye_cand);
                Mask u1 = take_lowest(bx1 & ~bit(zx), p);
                Mask v1 = bit(ye) | take_lowest(by1 & ~bit(ye), p - 1);
                auto part1 = ham_path_cover(g, Color::Blue, u1, v1, {Side::X, lowest_bit(u1)},
                                            {Side::Y, ye});
                Mask u2 = take_lowest(bx2, q);
                Mask v2 = bit(yj) | take_lowest(by2 & ~bit(yj), q - 1);
                auto part2 = ham_path_cover(g, Color::Blue, u2, v2, {Side::Y, yj},
                                            {Side::X, lowest_bit(u2)});
                if (part1 && part2) {
                    seq = *part1;
                    seq.push_back({Side::X, zx});
                    seq.insert(seq.end(), part2->begin(), part2->end());
                }
            }
        }
        if (!seq.empty()) {
            PathResult blue_path{Color::Blue, seq};
            validate_path(g, blue_path);
            if (blue_path.order() >= 2 * m_up) path_override = blue_path;
        }
    }

    // Cycle of length >= 2*floor(n/2): the v*/u* moves, then a red cycle.
    if (!z_on_x) {
        if (4 * popcount(g.col(Color::Red, zy) & hx1) < n) {
            hy2 &= ~bit(zy);
            hy1 |= bit(zy);
        }
    } else {
        if (4 * popcount(g.row(Color::Blue, zx) & hy2) < n) {
            hx1 &= ~bit(zx);
            hx2 |= bit(zx);
        }
    }
    if (2 * popcount(hy2) >= n) {
        if (2 * popcount(hx1) >= n) {
            trace.push_back("d:m1-red");
            cycle = need_cycle(ham_cycle_in(g, Color::Red, hx1, hy2, m_up), "m1 red");
        } else {
            trace.push_back("d:m1-blue");
            cycle = need_cycle(ham_cycle_in(g, Color::Blue, hx2, hy2, m_up), "m1 blue");
        }
        if (!path_override) path_override = PathResult{cycle.color, cycle.vertices};
        return;
    }
    if (wr >= 0 && hats.w_r_on_y) {
        wr_fallback();
        if (!path_override) path_override = PathResult{cycle.color, cycle.vertices};
        return;
    }
    trace.push_back("d:m1-floor");
    cycle = need_cycle(ham_cycle_in(g, Color::Red, hx1, hy2, m_down), "m1 floor");
    if (!path_override)
        throw BelowRegimeError("branch d: no 2*ceil(n/2) blue path in the final sub-case");
}

}  // namespace

RouteCertificate extremal_route(const ColoredBigraph& g, const ExtremalWitness& w,
                                const RouteParams& params) {
    const int n = g.n();
    const Rat gamma = params.gamma, eta = params.eta;
    require(eta >= Rat(0) && gamma <= Rat(1, 4) && gamma > Rat(0) && eta * 256 < gamma * gamma,
            "extremal_route: need 0 <= 16*sqrt(eta) < gamma <= 1/4");
    require(Rat(n) * gamma >= Rat(3), "extremal_route: need n >= 3/gamma");
    require(Rat(g.min_degree()) >= (Rat(3, 4) + gamma) * n,
            "extremal_route: delta(G) < (3/4 + gamma)n; deficit " +
                to_string((Rat(3, 4) + gamma) * n - g.min_degree()));
    ExtremalWitness at_eta = w;
    at_eta.eta = eta;
    if (!verify_witness(g, at_eta))
        throw PreconditionError("extremal_route: witness invalid at eta = " + to_string(eta));

    bool transposed = w.orientation == Side::Y;
    ColoredBigraph host = transposed ? g.transposed() : ColoredBigraph(g);
    RouteWork work{host, params, {}};
    if (transposed) work.trace.push_back("orient:Y");
    work.run(w.xprime, w.y1, w.y2);

    RouteCertificate cert;
    cert.cycle = work.cycle;
    cert.path = work.path_override ? *work.path_override
                                   : PathResult{work.cycle.color, work.cycle.vertices};
    cert.branch_trace = work.trace;
    if (transposed) {
        for (auto& v : cert.path.vertices) v.side = other(v.side);
        for (auto& v : cert.cycle.vertices) v.side = other(v.side);
    }
    check_certificate(g, cert);
    return cert;
}

// ---------------------------------------------------------------------------
// Certificate serialization and independent re-validation.

namespace {

nlohmann::json route_to_json(Color c, const std::vector<VertexRef>& seq) {
    nlohmann::json arr = nlohmann::json::array();
    for (auto v : seq)
        arr.push_back({std::string(v.side == Side::X ? "X" : "Y"), v.index});
    return {{"color", color_name(c)}, {"vertices", arr}};
}

void route_from_json(const nlohmann::json& j, Color& c, std::vector<VertexRef>& seq) {
    std::string cname = j.at("color").get<std::string>();
    if (cname != "red" && cname != "blue") throw PreconditionError("bad certificate color");
    c = cname == "red" ? Color::Red : Color::Blue;
    seq.clear();
    for (const auto& item : j.at("vertices")) {
        std::string side = item.at(0).get<std::string>();
        if (side != "X" && side != "Y") throw PreconditionError("bad certificate side tag");
        seq.push_back({side == "X" ? Side::X : Side::Y, item.at(1).get<int>()});
    }
}

}  // namespace

std::string RouteCertificate::to_json() const {
    nlohmann::json j{{"path", route_to_json(path.color, path.vertices)},
                     {"cycle", route_to_json(cycle.color, cycle.vertices)},
                     {"branch_trace", branch_trace}};
    return j.dump(2) + "\n";
}

RouteCertificate RouteCertificate::from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw PreconditionError(std::string("certificate does not parse: ") + e.what());
    }
    RouteCertificate cert;
    try {
        route_from_json(j.at("path"), cert.path.color, cert.path.vertices);
        route_from_json(j.at("cycle"), cert.cycle.color, cert.cycle.vertices);
        for (const auto& s : j.at("branch_trace")) cert.branch_trace.push_back(s.get<std::string>());
    } catch (const nlohmann::json::exception& e) {
        throw PreconditionError(std::string("certificate missing fields: ") + e.what());
    }
    return cert;
}

void check_certificate(const ColoredBigraph& g, const RouteCertificate& cert) {
    const int n = g.n();
    // Deliberately self-contained: only the bigraph adjacency API is used.
    auto check_seq = [&](Color c, const std::vector<VertexRef>& seq, bool cyclic,
                         const char* what) {
        Mask seen_x = 0, seen_y = 0;
        for (size_t i = 0; i < seq.size(); ++i) {
            VertexRef v = seq[i];
            if (v.index < 0 || v.index >= n)
                throw ValidationError(std::string(what) + " vertex out of range");
            Mask& seen = v.side == Side::X ? seen_x : seen_y;
            if (seen & bit(v.index))
                throw ValidationError(std::string(what) + " repeats a vertex");
            seen |= bit(v.index);
        }
        size_t steps = cyclic ? seq.size() : seq.size() - 1;
        for (size_t i = 0; i < steps; ++i) {
            VertexRef u = seq[i], v = seq[(i + 1) % seq.size()];
            if (u.side == v.side)
                throw ValidationError(std::string(what) + " does not alternate sides");
            int x = u.side == Side::X ? u.index : v.index;
            int y = u.side == Side::X ? v.index : u.index;
            if (!g.has_edge(c, x, y))
                throw ValidationError("edge not " + std::string(color_name(c)) + ": (" +
                                      std::to_string(x) + "," + std::to_string(y) + ")");
        }
    };
    if (cert.path.order() < 2 * ((n + 1) / 2))
        throw ValidationError("path too short: order " + std::to_string(cert.path.order()) +
                              " < " + std::to_string(2 * ((n + 1) / 2)));
    check_seq(cert.path.color, cert.path.vertices, false, "path");
    if (cert.cycle.length() < std::max(4, 2 * (n / 2)))
        throw ValidationError("cycle too short: length " + std::to_string(cert.cycle.length()) +
                              " < " + std::to_string(2 * (n / 2)));
    if (cert.cycle.length() % 2 != 0) throw ValidationError("cycle length must be even");
    check_seq(cert.cycle.color, cert.cycle.vertices, true, "cycle");
}

}  // namespace bimono
