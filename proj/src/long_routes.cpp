#include "bimono/long_routes.hpp"

#include <algorithm>
#include <cassert>

namespace bimono {

void validate_path(const ColoredBigraph& g, const PathResult& p) {
    Mask seen_x = 0, seen_y = 0;
    for (size_t i = 0; i < p.vertices.size(); ++i) {
        VertexRef v = p.vertices[i];
        if (v.index < 0 || v.index >= g.n()) throw ValidationError("path vertex out of range");
        Mask& seen = v.side == Side::X ? seen_x : seen_y;
        if (seen & bit(v.index)) throw ValidationError("path repeats a vertex");
        seen |= bit(v.index);
        if (i > 0) {
            VertexRef u = p.vertices[i - 1];
            if (u.side == v.side) throw ValidationError("path does not alternate sides");
            int x = u.side == Side::X ? u.index : v.index;
            int y = u.side == Side::X ? v.index : u.index;
            if (!g.has_edge(p.color, x, y))
                throw ValidationError(std::string("edge not ") + color_name(p.color) + ": (" +
                                      std::to_string(x) + "," + std::to_string(y) + ")");
        }
    }
}

void validate_cycle(const ColoredBigraph& g, const CycleResult& c) {
    if (c.length() < 4 || c.length() % 2 != 0)
        throw ValidationError("cycle must have even length >= 4");
    PathResult as_path{c.color, c.vertices};
    validate_path(g, as_path);
    VertexRef u = c.vertices.back(), v = c.vertices.front();
    if (u.side == v.side) throw ValidationError("cycle does not alternate sides");
    int x = u.side == Side::X ? u.index : v.index;
    int y = u.side == Side::X ? v.index : u.index;
    if (!g.has_edge(c.color, x, y)) throw ValidationError("cycle closing edge missing");
}

namespace {

// Vertices of the color-c subgraph reachable from `from`, restricted to
// avail_x/avail_y (which should include `from` itself).
void reach_masks(const ColoredBigraph& g, Color c, VertexRef from, Mask avail_x, Mask avail_y,
                 Mask& out_x, Mask& out_y) {
    Mask rx = 0, ry = 0, fx = 0, fy = 0;
    (from.side == Side::X ? fx : fy) = bit(from.index);
    rx = fx & avail_x;
    ry = fy & avail_y;
    fx = rx;
    fy = ry;
    while (fx | fy) {
        Mask ny = 0, nx = 0;
        BIMONO_FOR_BITS(x, fx) ny |= g.row(c, x);
        BIMONO_FOR_BITS(y, fy) nx |= g.col(c, y);
        nx &= avail_x & ~rx;
        ny &= avail_y & ~ry;
        rx |= nx;
        ry |= ny;
        fx = nx;
        fy = ny;
    }
    out_x = rx;
    out_y = ry;
}

// Upper bound on a path (or cycle) order inside the color-c subgraph,
// from its component side sizes.
void color_upper_bounds(const ColoredBigraph& g, Color c, int& path_ub, int& cycle_ub) {
    path_ub = 0;
    cycle_ub = 0;
    Mask todo_x = g.full(), todo_y = g.full();
    for (int x = 0; x < g.n(); ++x) {
        if (!(todo_x & bit(x))) continue;
        Mask cx, cy;
        reach_masks(g, c, {Side::X, x}, todo_x, todo_y, cx, cy);
        todo_x &= ~cx;
        todo_y &= ~cy;
        int a = popcount(cx), b = popcount(cy);
        int lo = std::min(a, b);
        if (lo >= 1 && a + b >= 2) path_ub = std::max(path_ub, 2 * lo + (a != b ? 1 : 0));
        if (lo >= 2) cycle_ub = std::max(cycle_ub, 2 * lo);
    }
}

struct MonoSearch {
    const ColoredBigraph& g;
    Color c;
    int ub = 0;
    int best = 0;
    std::vector<VertexRef> cur, best_seq;
    Mask avail_x = 0, avail_y = 0;

    // --- longest path ---
    void path_dfs(VertexRef v) {
        if (static_cast<int>(cur.size()) > best) {
            best = static_cast<int>(cur.size());
            best_seq = cur;
        }
        if (best >= ub) return;
        Mask rx, ry;
        reach_masks(g, c, v, avail_x | side_bit(v, Side::X), avail_y | side_bit(v, Side::Y), rx,
                    ry);
        if (static_cast<int>(cur.size()) + popcount(rx) + popcount(ry) - 1 <= best) return;
        Mask cand = g.adj(c, v) & (v.side == Side::X ? avail_y : avail_x);
        BIMONO_FOR_BITS(w, cand) {
            VertexRef next{other(v.side), w};
            toggle(next);
            cur.push_back(next);
            path_dfs(next);
            cur.pop_back();
            toggle(next);
            if (best >= ub) return;
        }
    }

    // --- longest cycle; anchor is the lowest X-index on the cycle ---
    int anchor = -1;

    void cycle_dfs(VertexRef v) {
        if (best >= ub) return;
        if (v.side == Side::Y && static_cast<int>(cur.size()) >= 4 &&
            (g.col(c, v.index) & bit(anchor)) && static_cast<int>(cur.size()) > best) {
            best = static_cast<int>(cur.size());
            best_seq = cur;
            if (best >= ub) return;
        }
        Mask rx, ry;
        reach_masks(g, c, v, avail_x | side_bit(v, Side::X) | bit(anchor),
                    avail_y | side_bit(v, Side::Y), rx, ry);
        if (!(rx & bit(anchor))) return;  // cannot close the cycle
        if (static_cast<int>(cur.size()) + popcount(rx) + popcount(ry) - 2 <= best) return;
        Mask cand = g.adj(c, v) & (v.side == Side::X ? avail_y : avail_x);
        BIMONO_FOR_BITS(w, cand) {
            VertexRef next{other(v.side), w};
            toggle(next);
            cur.push_back(next);
            cycle_dfs(next);
            cur.pop_back();
            toggle(next);
            if (best >= ub) return;
        }
    }

private:
    static Mask side_bit(VertexRef v, Side s) { return v.side == s ? bit(v.index) : 0; }
    void toggle(VertexRef v) { (v.side == Side::X ? avail_x : avail_y) ^= bit(v.index); }
};

}  // namespace

PathResult longest_path_in_color(const ColoredBigraph& g, Color c) {
    int path_ub, cycle_ub;
    color_upper_bounds(g, c, path_ub, cycle_ub);
    MonoSearch s{g, c};
    s.ub = path_ub;
    if (path_ub == 0) return PathResult{c, {}};
    for (int i = 0; i < 2 * g.n() && s.best < s.ub; ++i) {
        VertexRef v{i < g.n() ? Side::X : Side::Y, i % g.n()};
        s.avail_x = g.full();
        s.avail_y = g.full();
        (v.side == Side::X ? s.avail_x : s.avail_y) &= ~bit(v.index);
        s.cur = {v};
        s.path_dfs(v);
    }
    return PathResult{c, s.best_seq};
}

std::optional<CycleResult> longest_cycle_in_color(const ColoredBigraph& g, Color c) {
    int path_ub, cycle_ub;
    color_upper_bounds(g, c, path_ub, cycle_ub);
    if (cycle_ub < 4) return std::nullopt;
    MonoSearch s{g, c};
    s.ub = cycle_ub;
    for (int x0 = 0; x0 < g.n() && s.best < s.ub; ++x0) {
        s.anchor = x0;
        s.avail_x = g.full() & ~(bit(x0) | (bit(x0) - 1));  // only indices > x0
        s.avail_y = g.full();
        s.cur = {{Side::X, x0}};
        s.cycle_dfs({Side::X, x0});
    }
    if (s.best < 4) return std::nullopt;
    return CycleResult{c, s.best_seq};
}

PathResult longest_mono_path_exact(const ColoredBigraph& g, int cap) {
    if (g.n() > cap)
        throw PreconditionError("search cap exceeded: n=" + std::to_string(g.n()) + " > cap=" +
                                std::to_string(cap));
    PathResult r = longest_path_in_color(g, Color::Red);
    PathResult b = longest_path_in_color(g, Color::Blue);
    PathResult out = b.order() > r.order() ? b : r;
    validate_path(g, out);
    return out;
}

std::optional<CycleResult> longest_mono_cycle_exact(const ColoredBigraph& g, int cap) {
    if (g.n() > cap)
        throw PreconditionError("search cap exceeded: n=" + std::to_string(g.n()) + " > cap=" +
                                std::to_string(cap));
    auto r = longest_cycle_in_color(g, Color::Red);
    auto b = longest_cycle_in_color(g, Color::Blue);
    std::optional<CycleResult> out;
    if (r && (!b || r->length() >= b->length())) out = r;
    else out = b;
    if (out) validate_cycle(g, *out);
    return out;
}

// ---------------------------------------------------------------------------
// Plain-graph longest cycle (anchored DFS, same pruning idea as above).

namespace {

Mask simple_reach(const SimpleGraph& h, int from, Mask avail) {
    Mask r = bit(from) & avail, f = r;
    while (f) {
        Mask nf = 0;
        BIMONO_FOR_BITS(v, f) nf |= h.adj[v];
        nf &= avail & ~r;
        r |= nf;
        f = nf;
    }
    return r;
}

struct SimpleCycleSearch {
    const SimpleGraph& h;
    int anchor = 0;
    int best = 0;
    Mask avail = 0;
    std::vector<int> cur, best_seq;

    void dfs(int v) {
        if (static_cast<int>(cur.size()) >= 3 && (h.adj[v] & bit(anchor)) &&
            static_cast<int>(cur.size()) > best) {
            best = static_cast<int>(cur.size());
            best_seq = cur;
        }
        Mask r = simple_reach(h, v, avail | bit(v) | bit(anchor));
        if (!(r & bit(anchor))) return;
        if (static_cast<int>(cur.size()) + popcount(r) - 2 <= best) return;
        Mask cand = h.adj[v] & avail;
        BIMONO_FOR_BITS(w, cand) {
            avail &= ~bit(w);
            cur.push_back(w);
            dfs(w);
            cur.pop_back();
            avail |= bit(w);
        }
    }
};

}  // namespace

std::vector<int> longest_cycle_exact(const SimpleGraph& h) {
    SimpleCycleSearch s{h};
    Mask full = h.n == 64 ? ~Mask{0} : (Mask{1} << h.n) - 1;
    for (int v0 = 0; v0 < h.n; ++v0) {
        s.anchor = v0;
        s.avail = full & ~(bit(v0) | (bit(v0) - 1));
        s.cur = {v0};
        s.dfs(v0);
    }
    return s.best_seq;
}

std::vector<int> erdos_gallai_cycle(const SimpleGraph& h, int k) {
    if (k < 2) throw PreconditionError("erdos_gallai_cycle: k must be >= 2");
    if (2 * h.edge_count() <= static_cast<long long>(k) * (h.n - 1))
        throw PreconditionError("erdos_gallai_cycle: need e(G) > k(n-1)/2, have e=" +
                                std::to_string(h.edge_count()) + ", k=" + std::to_string(k) +
                                ", n=" + std::to_string(h.n));

    // Heuristic: peel vertices of degree <= k/2, then extend a maximal path
    // and close it through the endpoint's furthest neighbor on the path.
    std::vector<Mask> adj = h.adj;
    Mask alive = h.n == 64 ? ~Mask{0} : (Mask{1} << h.n) - 1;
    bool changed = true;
    while (changed) {
        changed = false;
        BIMONO_FOR_BITS(v, alive) {
            if (2 * popcount(adj[v] & alive) <= k) {
                alive &= ~bit(v);
                changed = true;
            }
        }
    }
    if (alive) {
        std::vector<int> path{lowest_bit(alive)};
        Mask used = bit(path[0]);
        for (bool grew = true; grew;) {  // extend at both ends
            grew = false;
            for (int end : {0, 1}) {
                int v = end == 0 ? path.front() : path.back();
                Mask cand = adj[v] & alive & ~used;
                if (cand) {
                    int w = lowest_bit(cand);
                    if (end == 0)
                        path.insert(path.begin(), w);
                    else
                        path.push_back(w);
                    used |= bit(w);
                    grew = true;
                }
            }
        }
        std::vector<int> best_cycle;
        for (int end : {0, 1}) {
            std::vector<int> p = path;
            if (end == 1) std::reverse(p.begin(), p.end());
            for (int i = static_cast<int>(p.size()) - 1; i >= 2; --i) {
                if (adj[p[0]] & bit(p[i])) {
                    std::vector<int> cyc(p.begin(), p.begin() + i + 1);
                    if (cyc.size() > best_cycle.size()) best_cycle = cyc;
                    break;
                }
            }
        }
        if (static_cast<int>(best_cycle.size()) >= k + 1) return best_cycle;
    }

    // Exact fallback; the edge-count hypothesis guarantees success.
    std::vector<int> cyc = longest_cycle_exact(h);
    if (static_cast<int>(cyc.size()) < k + 1)
        throw InternalError("erdos_gallai_cycle: exact search found no cycle of length >= k+1");
    return cyc;
}

// ---------------------------------------------------------------------------
// Bipartite views, Berge's criterion, Hamiltonian path search.

BipartiteView make_view(const ColoredBigraph& g, Color c, Mask xs, Mask ys) {
    BipartiteView h;
    std::vector<int> xpos(g.n(), -1), ypos(g.n(), -1);
    BIMONO_FOR_BITS(x, xs) {
        xpos[x] = h.mu++;
        h.u_origin.push_back({Side::X, x});
    }
    BIMONO_FOR_BITS(y, ys) {
        ypos[y] = h.mv++;
        h.v_origin.push_back({Side::Y, y});
    }
    h.u_adj.assign(h.mu, 0);
    h.v_adj.assign(h.mv, 0);
    BIMONO_FOR_BITS(x, xs) {
        BIMONO_FOR_BITS(y, g.row(c, x) & ys) {
            h.u_adj[xpos[x]] |= bit(ypos[y]);
            h.v_adj[ypos[y]] |= bit(xpos[x]);
        }
    }
    return h;
}

bool berge_check(const BipartiteView& h) {
    if (!h.balanced()) throw PreconditionError("berge_check: parts must have equal size");
    int m = h.mu;
    if (m < 2) throw PreconditionError("berge_check: need 2m >= 4");
    auto scan = [m](const std::vector<Mask>& adj) -> int {
        std::vector<int> deg(m);
        for (int i = 0; i < m; ++i) deg[i] = popcount(adj[i]);
        std::sort(deg.begin(), deg.end());
        for (int j = 1; j <= m; ++j)
            if (deg[j - 1] <= j + 1) return deg[j - 1];
        return -1;  // no qualifying index: side imposes no constraint
    };
    int du = scan(h.u_adj), dv = scan(h.v_adj);
    if (du < 0 || dv < 0) return true;
    return du + dv >= m + 2;
}

namespace {

struct LocalVertex {
    bool u_side;
    int idx;
    bool operator==(const LocalVertex&) const = default;
};

struct CoverPathSearch {
    const BipartiteView& h;
    LocalVertex target;
    Mask rem_u = 0, rem_v = 0;  // unvisited (target included until stepped on)
    std::vector<LocalVertex> seq;
    bool found = false;

    Mask adj_of(LocalVertex v) const { return v.u_side ? h.u_adj[v.idx] : h.v_adj[v.idx]; }

    void reach(LocalVertex from, Mask& ru, Mask& rv) const {
        Mask fu = 0, fv = 0;
        (from.u_side ? fu : fv) = bit(from.idx);
        ru = fu;
        rv = fv;
        while (fu | fv) {
            Mask nv = 0, nu = 0;
            BIMONO_FOR_BITS(i, fu) nv |= h.u_adj[i];
            BIMONO_FOR_BITS(i, fv) nu |= h.v_adj[i];
            nu &= rem_u & ~ru;
            nv &= rem_v & ~rv;
            ru |= nu;
            rv |= nv;
            fu = nu;
            fv = nv;
        }
    }

    bool dfs(LocalVertex cur) {
        if (!(rem_u | rem_v)) {
            found = cur == target;
            return found;
        }
        Mask ru, rv;
        reach(cur, ru, rv);
        if ((ru & rem_u) != rem_u || (rv & rem_v) != rem_v) return false;
        Mask cand = adj_of(cur) & (cur.u_side ? rem_v : rem_u);
        Mask tbit = bit(target.idx);
        bool target_opposite = cur.u_side != target.u_side;
        if (target_opposite && (cand & tbit) && popcount(rem_u | rem_v) > 1)
            cand &= ~tbit;  // step onto the target only last
        // fail-first: try low remaining-degree candidates first
        std::vector<std::pair<int, int>> order;
        BIMONO_FOR_BITS(w, cand) {
            Mask wadj = cur.u_side ? h.v_adj[w] : h.u_adj[w];
            order.emplace_back(popcount(wadj & (cur.u_side ? rem_u : rem_v)), w);
        }
        std::sort(order.begin(), order.end());
        for (auto [deg, w] : order) {
            LocalVertex next{!cur.u_side, w};
            Mask& rem = next.u_side ? rem_u : rem_v;
            rem &= ~bit(w);
            seq.push_back(next);
            if (dfs(next)) return true;
            seq.pop_back();
            rem |= bit(w);
        }
        return false;
    }
};

std::optional<std::vector<LocalVertex>> cover_path(const BipartiteView& h, LocalVertex a,
                                                   LocalVertex b, Mask cover_u, Mask cover_v) {
    int cu = popcount(cover_u), cv = popcount(cover_v);
    if (a.u_side == b.u_side) {
        int big = a.u_side ? cu : cv, small = a.u_side ? cv : cu;
        if (big != small + 1) return std::nullopt;
    } else if (cu != cv) {
        return std::nullopt;
    }
    if (a == b) return std::nullopt;
    CoverPathSearch s{h, b};
    s.rem_u = cover_u & ~(a.u_side ? bit(a.idx) : 0);
    s.rem_v = cover_v & ~(!a.u_side ? bit(a.idx) : 0);
    s.seq = {a};
    if (s.dfs(a)) return s.seq;
    return std::nullopt;
}

}  // namespace

std::optional<std::vector<VertexRef>> ham_path_between(const BipartiteView& h, int u, int v) {
    if (!h.balanced()) throw PreconditionError("ham_path_between: parts must have equal size");
    if (u < 0 || u >= h.mu || v < 0 || v >= h.mv)
        throw PreconditionError("ham_path_between: endpoint out of range");
    Mask full_u = h.mu == 64 ? ~Mask{0} : (Mask{1} << h.mu) - 1;
    Mask full_v = h.mv == 64 ? ~Mask{0} : (Mask{1} << h.mv) - 1;
    auto seq = cover_path(h, {true, u}, {false, v}, full_u, full_v);
    if (!seq) return std::nullopt;
    std::vector<VertexRef> out;
    for (LocalVertex lv : *seq) out.push_back(lv.u_side ? h.u_origin[lv.idx] : h.v_origin[lv.idx]);
    return out;
}

std::optional<std::vector<VertexRef>> ham_path_cover(const ColoredBigraph& g, Color c, Mask xs,
                                                     Mask ys, VertexRef from, VertexRef to) {
    Mask fb = bit(from.index), tb = bit(to.index);
    if (from.side == Side::X ? !(xs & fb) : !(ys & fb))
        throw PreconditionError("ham_path_cover: start not inside cover sets");
    if (to.side == Side::X ? !(xs & tb) : !(ys & tb))
        throw PreconditionError("ham_path_cover: end not inside cover sets");
    BipartiteView h = make_view(g, c, xs, ys);
    std::vector<int> xpos(g.n(), -1), ypos(g.n(), -1);
    for (int i = 0; i < h.mu; ++i) xpos[h.u_origin[i].index] = i;
    for (int i = 0; i < h.mv; ++i) ypos[h.v_origin[i].index] = i;
    auto local = [&](VertexRef v) -> LocalVertex {
        return {v.side == Side::X, v.side == Side::X ? xpos[v.index] : ypos[v.index]};
    };
    Mask full_u = h.mu == 64 ? ~Mask{0} : (h.mu ? (Mask{1} << h.mu) - 1 : 0);
    Mask full_v = h.mv == 64 ? ~Mask{0} : (h.mv ? (Mask{1} << h.mv) - 1 : 0);
    auto seq = cover_path(h, local(from), local(to), full_u, full_v);
    if (!seq) return std::nullopt;
    std::vector<VertexRef> out;
    for (LocalVertex lv : *seq) out.push_back(lv.u_side ? h.u_origin[lv.idx] : h.v_origin[lv.idx]);
    return out;
}

}  // namespace bimono
