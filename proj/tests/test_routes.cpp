#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <vector>

#include "bimono/families.hpp"
#include "bimono/long_routes.hpp"
#include "bimono/random.hpp"

using namespace bimono;

namespace {

// Independent brute-force oracle: plain recursion over vertex sequences,
// no pruning, no shared search code.
struct Naive {
    const ColoredBigraph& g;
    Color c;
    int best_path = 0, best_cycle = 0;

    void extend(std::vector<VertexRef>& seq, Mask used_x, Mask used_y) {
        best_path = std::max(best_path, static_cast<int>(seq.size()));
        VertexRef last = seq.back();
        if (seq.size() >= 4 && last.side != seq.front().side) {
            VertexRef a = seq.front(), b = last;
            int x = a.side == Side::X ? a.index : b.index;
            int y = a.side == Side::X ? b.index : a.index;
            if (g.has_edge(c, x, y))
                best_cycle = std::max(best_cycle, static_cast<int>(seq.size()));
        }
        Mask nbrs = g.adj(c, last) & ~(last.side == Side::X ? used_y : used_x);
        BIMONO_FOR_BITS(v, nbrs) {
            seq.push_back({other(last.side), v});
            if (last.side == Side::X)
                extend(seq, used_x, used_y | bit(v));
            else
                extend(seq, used_x | bit(v), used_y);
            seq.pop_back();
        }
    }

    void run() {
        std::vector<VertexRef> seq;
        for (int x = 0; x < g.n(); ++x) {
            seq.assign(1, {Side::X, x});
            extend(seq, bit(x), 0);
        }
        for (int y = 0; y < g.n(); ++y) {
            seq.assign(1, {Side::Y, y});
            extend(seq, 0, bit(y));
        }
        if (g.edge_count() == 0) best_path = 0;  // a lone vertex is not a path here
    }
};

std::pair<int, int> naive_longest(const ColoredBigraph& g) {
    int path = 0, cycle = 0;
    for (Color c : {Color::Red, Color::Blue}) {
        Naive nv{g, c};
        nv.run();
        path = std::max(path, nv.best_path);
        cycle = std::max(cycle, nv.best_cycle);
    }
    return {path, cycle};
}

}  // namespace

TEST_CASE("exact oracle matches the naive oracle on random instances") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        int n = 2 + static_cast<int>(seed % 3);
        ColoredBigraph g = random_coloring(n, Rat(1, 2), Rat(1, 2), seed);
        auto [np, nc] = naive_longest(g);
        PathResult p = longest_mono_path_exact(g);
        auto c = longest_mono_cycle_exact(g);
        CHECK(p.order() == np);
        CHECK((c ? c->length() : 0) == nc);
        CHECK((c ? c->length() : 0) <= p.order());
        if (p.order() > 0) validate_path(g, p);
        if (c) validate_cycle(g, *c);
    }
}

TEST_CASE("oracle anchor values") {
    ColoredBigraph k22(2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}}, {});
    CHECK(longest_mono_path_exact(k22).order() == 4);
    CHECK(longest_mono_cycle_exact(k22)->length() == 4);

    // gen_small_deg(6,2): blue/red blocks of K_{1,4}-shape; the off-block
    // singleton extends the best path to order 3 (2 min + 1 in a K_{a,b}
    // with a != b).
    CHECK(longest_mono_path_exact(gen_small_deg(6, 2).first).order() == 3);

    CHECK(longest_mono_cycle_exact(gen_cycle_extremal(5).first)->length() == 4);
    CHECK(longest_mono_path_exact(gen_cycle_extremal(5).first).order() == 9);
    CHECK(longest_mono_cycle_exact(gen_large_deg(5).first)->length() == 6);

    ColoredBigraph empty(3, {}, {});
    CHECK(longest_mono_path_exact(empty).order() == 0);
    CHECK(!longest_mono_cycle_exact(empty));
}

TEST_CASE("search cap is enforced") {
    auto g = gen_large_deg(13).first;
    CHECK_THROWS_AS(longest_mono_path_exact(g), PreconditionError);
    CHECK_THROWS_AS(longest_mono_cycle_exact(g), PreconditionError);
    CHECK(longest_mono_path_exact(g, 13).order() == 14);
}

TEST_CASE("erdos_gallai_cycle anchors") {
    SimpleGraph k4(4);
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) k4.add_edge(u, v);
    CHECK(erdos_gallai_cycle(k4, 3).size() >= 4);
    CHECK_THROWS_AS(erdos_gallai_cycle(k4, 4), PreconditionError);  // 6 > 6 fails

    SimpleGraph c5(5);
    for (int v = 0; v < 5; ++v) c5.add_edge(v, (v + 1) % 5);
    CHECK(erdos_gallai_cycle(c5, 2).size() >= 3);
}

TEST_CASE("erdos_gallai_cycle on seeded random graphs") {
    int accepted = 0;
    for (std::uint64_t seed = 0; accepted < 100; ++seed) {
        std::uint64_t r = splitmix64(seed * 977 + 11);
        int n = 5 + static_cast<int>(r % 8);
        SimpleGraph h(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (splitmix64(r + u * 64 + v) & 1) h.add_edge(u, v);
        int k = 2 + static_cast<int>(splitmix64(r + 4096) % (n - 2));
        if (2 * h.edge_count() <= static_cast<long long>(k) * (n - 1)) continue;
        ++accepted;
        std::vector<int> cyc = erdos_gallai_cycle(h, k);
        CHECK(static_cast<int>(cyc.size()) >= k + 1);
        for (size_t i = 0; i < cyc.size(); ++i)
            CHECK((h.adj[cyc[i]] & bit(cyc[(i + 1) % cyc.size()])) != 0);
    }
}

TEST_CASE("berge_check anchors") {
    auto complete = [](int m) {
        ColoredBigraph g(m, {}, [&] {
            EdgeList e;
            for (int x = 0; x < m; ++x)
                for (int y = 0; y < m; ++y) e.emplace_back(x, y);
            return e;
        }());
        return make_view(g, Color::Blue, g.full(), g.full());
    };
    CHECK(berge_check(complete(2)));
    CHECK(berge_check(complete(3)));

    // K_{3,3} minus a perfect matching: all degrees 2, so j=k=1 and
    // 2+2 < 3+2.
    EdgeList e;
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y)
            if (x != y) e.emplace_back(x, y);
    ColoredBigraph g(3, e, {});
    CHECK(!berge_check(make_view(g, Color::Red, g.full(), g.full())));
}

TEST_CASE("berge implies Hamiltonian bi-connected") {
    int accepted = 0;
    for (std::uint64_t seed = 0; accepted < 60 && seed < 4000; ++seed) {
        int m = 2 + static_cast<int>(splitmix64(seed) % 4);
        ColoredBigraph g = random_coloring(m, Rat(0), Rat(2, 3), seed ^ 0xb10eULL);
        BipartiteView view = make_view(g, Color::Blue, g.full(), g.full());
        if (!berge_check(view)) continue;
        ++accepted;
        for (int u = 0; u < m; ++u)
            for (int v = 0; v < m; ++v) {
                auto path = ham_path_between(view, u, v);
                REQUIRE(path);
                CHECK(static_cast<int>(path->size()) == 2 * m);
            }
    }
    CHECK(accepted == 60);
}

TEST_CASE("ham_path_cover handles same-side endpoints") {
    auto g = gen_large_deg(6).first;  // [X1,Y1] is a complete blue K_{3,3}
    Mask xs = bit(0) | bit(1) | bit(2);
    Mask ys = bit(0) | bit(1);
    auto path = ham_path_cover(g, Color::Blue, xs, ys, {Side::X, 0}, {Side::X, 2});
    REQUIRE(path);
    CHECK(path->size() == 5);
    CHECK(path->front() == VertexRef{Side::X, 0});
    CHECK(path->back() == VertexRef{Side::X, 2});

    CHECK(!ham_path_cover(g, Color::Blue, bit(0) | bit(3), bit(0) | bit(3), {Side::X, 0},
                          {Side::Y, 3}));  // x0-y3 crosses the red block: disconnected in blue
}

TEST_CASE("validate rejects fabricated routes") {
    auto g = gen_large_deg(4).first;
    PathResult bogus{Color::Blue, {{Side::X, 0}, {Side::Y, 3}}};  // red edge claimed blue
    CHECK_THROWS_AS(validate_path(g, bogus), ValidationError);
    CycleResult short_cycle{Color::Blue, {{Side::X, 0}, {Side::Y, 0}}};
    CHECK_THROWS_AS(validate_cycle(g, short_cycle), ValidationError);
}
