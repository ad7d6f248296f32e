#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "bimono/extremal.hpp"
#include "bimono/families.hpp"
#include "bimono/random.hpp"

using namespace bimono;

namespace {

ExtremalWitness canonical_witness(int n) {
    // gen_large_deg block structure: X1 = low half, blue [X1,Y1], red [X1,Y2]
    int h = (n + 1) / 2;
    Mask x1 = take_lowest((Mask{1} << n) - 1, h);
    Mask y1 = x1;  // blue-dense aligned half
    Mask y2 = ((Mask{1} << n) - 1) & ~y1;
    return {Side::X, x1, y1, y2, Rat(0)};
}

}  // namespace

TEST_CASE("verify_witness on the block structure") {
    auto g = gen_large_deg(6).first;
    ExtremalWitness w = canonical_witness(6);
    CHECK(verify_witness(g, w));

    ExtremalWitness swapped = w;
    std::swap(swapped.y1, swapped.y2);
    CHECK(!verify_witness(g, swapped));  // e_R(X1, Y2-as-y1) = 9 > 0

    ExtremalWitness tiny = w;
    tiny.xprime = bit(0);
    CHECK(!verify_witness(g, tiny));

    ExtremalWitness overlap = w;
    overlap.y2 = w.y1;
    CHECK_THROWS_AS(verify_witness(g, overlap), PreconditionError);
}

TEST_CASE("verify_witness is monotone in eta") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        int n = 4 + static_cast<int>(seed % 4);
        ColoredBigraph g = random_coloring(n, Rat(1, 2), Rat(1, 2), seed + 99);
        auto w = find_witness(g, Rat(1, 8));
        if (!w) continue;
        ExtremalWitness loose = *w;
        loose.eta = Rat(1, 2);
        CHECK(verify_witness(g, loose));
    }
}

TEST_CASE("find_witness anchors") {
    CHECK(find_witness(gen_large_deg(8).first, Rat(0)));

    EdgeList all;
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y) all.emplace_back(x, y);
    ColoredBigraph k44(4, all, all);
    CHECK(!find_witness(k44, Rat(1, 100)));

    ColoredBigraph edgeless(4, {}, {});
    auto w = find_witness(edgeless, Rat(1, 4));
    REQUIRE(w);
    CHECK(verify_witness(edgeless, *w));
}

TEST_CASE("long_path_prop keeps the complete blue block intact") {
    auto g = gen_large_deg(12).first;
    Mask x1 = take_lowest(g.full(), 6), y1 = x1;  // blue block is the aligned halves
    RouteParams params{Rat(1, 4), Rat(0), Rat(0)};
    BiConnectedPair pair = long_path_prop(g, x1, y1, params, Color::Blue);
    CHECK(pair.xs == x1);
    CHECK(pair.ys == y1);
    CHECK(pair.excluded_x == 0);
    CHECK(pair.excluded_y == 0);

    // red roles on the blue block: the e_other bound fails
    CHECK_THROWS_AS(long_path_prop(g, x1, y1, params, Color::Red), PreconditionError);
    // n below 3/gamma
    auto small = gen_large_deg(8).first;
    CHECK_THROWS_AS(long_path_prop(small, take_lowest(small.full(), 4),
                                   take_lowest(small.full(), 4), params, Color::Blue),
                    PreconditionError);
    // 8*sqrt(theta) >= gamma
    RouteParams bad{Rat(1, 4), Rat(0), Rat(1, 100)};
    CHECK_THROWS_AS(long_path_prop(g, x1, y1, bad, Color::Blue), PreconditionError);
}

TEST_CASE("extract_ham_path spans a complete block") {
    auto g = gen_large_deg(12).first;
    Mask x1 = take_lowest(g.full(), 6), y1 = x1;
    RouteParams params{Rat(1, 4), Rat(0), Rat(0)};
    BiConnectedPair pair = long_path_prop(g, x1, y1, params, Color::Blue);
    PathResult p = extract_ham_path(g, pair, x1, y1, {Side::X, 0}, {Side::Y, 3}, params);
    CHECK(p.order() == 12);
    CHECK(p.vertices.front() == VertexRef{Side::X, 0});
    CHECK(p.vertices.back() == VertexRef{Side::Y, 3});

    CHECK_THROWS_AS(extract_ham_path(g, pair, x1, take_lowest(y1, 5), {Side::X, 0},
                                     {Side::Y, 3}, params),
                    PreconditionError);  // unequal sizes
}

TEST_CASE("big_part_prop on a synthetic wide blue instance") {
    // complete blue K_{12,12}; xprime = 9 lowest X, yprime = 6 lowest Y
    EdgeList all;
    for (int x = 0; x < 12; ++x)
        for (int y = 0; y < 12; ++y) all.emplace_back(x, y);
    ColoredBigraph g(12, {}, all);
    RouteParams params{Rat(1, 4), Rat(0), Rat(0)};
    CycleResult cyc = big_part_prop(g, take_lowest(g.full(), 9), take_lowest(g.full(), 6), params);
    CHECK(cyc.length() == 12);
    CHECK(cyc.color == Color::Blue);

    CHECK_THROWS_AS(big_part_prop(g, take_lowest(g.full(), 8), take_lowest(g.full(), 6), params),
                    PreconditionError);  // |X'| < 3n/4
    RouteParams bad{Rat(1, 4), Rat(0), Rat(1, 64)};
    CHECK_THROWS_AS(big_part_prop(g, take_lowest(g.full(), 9), take_lowest(g.full(), 6), bad),
                    PreconditionError);  // 8*sqrt(theta) >= gamma
}

TEST_CASE("separator_partition: split red components give empty separator") {
    auto g = gen_large_deg(8).first;  // red components (X1 u Y2), (X2 u Y1)
    Mask x1 = take_lowest(g.full(), 4), x2 = g.full() & ~x1;
    BiConnectedPair pair_a{x1, x2, Color::Red, 0, 0};  // [X1, Y2], Y2 = high half
    BiConnectedPair pair_b{x2, x1, Color::Red, 0, 0};
    SeparatorResult sep = separator_partition(g, pair_a, pair_b);
    REQUIRE(std::holds_alternative<HatPartition>(sep));
    const auto& hats = std::get<HatPartition>(sep);
    CHECK(hats.w_r == 0);
    CHECK(hats.hat_x1 == x1);
    CHECK(hats.hat_y2 == x2);
    CHECK(hats.hat_x2 == x2);
    CHECK(hats.hat_y1 == x1);
    // no red edge crosses the hats
    CHECK(g.color_edge_count(hats.hat_x1, hats.hat_y1, Color::Red) == 0);
    CHECK(g.color_edge_count(hats.hat_x2, hats.hat_y2, Color::Red) == 0);
}

TEST_CASE("separator_partition: a single bridge vertex is the separator") {
    // red blocks [X1,Y1], [X2,Y2] joined only through y0's edges into X2
    EdgeList red;
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y) red.emplace_back(x, y);
    for (int x = 3; x < 6; ++x) {
        for (int y = 3; y < 6; ++y) red.emplace_back(x, y);
        red.emplace_back(x, 0);  // bridge via y0
    }
    ColoredBigraph g(6, red, {});
    BiConnectedPair pair_a{take_lowest(g.full(), 3), bit(1) | bit(2), Color::Red, 0, 0};
    BiConnectedPair pair_b{g.full() & ~take_lowest(g.full(), 3), bit(3) | bit(4) | bit(5),
                           Color::Red, 0, 0};
    SeparatorResult sep = separator_partition(g, pair_a, pair_b);
    REQUIRE(std::holds_alternative<HatPartition>(sep));
    const auto& hats = std::get<HatPartition>(sep);
    CHECK(hats.w_r_on_y);
    CHECK(hats.w_r == bit(0));
}

TEST_CASE("separator_partition: two disjoint connections signal a red cycle") {
    EdgeList red;
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y) red.emplace_back(x, y);
    ColoredBigraph g(4, red, {});
    BiConnectedPair pair_a{take_lowest(g.full(), 2), take_lowest(g.full(), 2), Color::Red, 0, 0};
    BiConnectedPair pair_b{g.full() & ~take_lowest(g.full(), 2), g.full() & ~take_lowest(g.full(), 2),
                           Color::Red, 0, 0};
    CHECK(std::holds_alternative<RedCycleSignal>(separator_partition(g, pair_a, pair_b)));

    CHECK_THROWS_AS(separator_partition(g, pair_a, pair_a), PreconditionError);
}

TEST_CASE("extremal_route on the block family") {
    RouteParams params{Rat(1, 4), Rat(0), Rat(0)};
    auto g12 = gen_large_deg(12).first;
    RouteCertificate cert = extremal_route(g12, canonical_witness(12), params);
    CHECK(cert.cycle.length() == 12);
    CHECK(cert.path.order() >= 12);
    CHECK(std::find(cert.branch_trace.begin(), cert.branch_trace.end(), "b:long-path") !=
          cert.branch_trace.end());

    auto g13 = gen_large_deg(13).first;
    RouteCertificate cert13 = extremal_route(g13, canonical_witness(13), params);
    CHECK(cert13.cycle.length() >= 12);
    CHECK(cert13.path.order() >= 14);
}

TEST_CASE("extremal_route reaches branch (a) on a wide witness") {
    // [X, Y1] complete blue, [X, Y2] complete red, n = 12: X1' = X
    EdgeList blue, red;
    for (int x = 0; x < 12; ++x) {
        for (int y = 0; y < 6; ++y) blue.emplace_back(x, y);
        for (int y = 6; y < 12; ++y) red.emplace_back(x, y);
    }
    ColoredBigraph g(12, red, blue);
    ExtremalWitness w{Side::X, g.full(), take_lowest(g.full(), 6), g.full() & ~take_lowest(g.full(), 6),
                      Rat(0)};
    RouteCertificate cert = extremal_route(g, w, RouteParams{Rat(1, 4), Rat(0), Rat(0)});
    CHECK(cert.cycle.length() >= 12);
    CHECK(std::find(cert.branch_trace.begin(), cert.branch_trace.end(), "a:big-part") !=
          cert.branch_trace.end());
}

TEST_CASE("extremal_route parameter guards") {
    auto g = gen_large_deg(12).first;
    ExtremalWitness w = canonical_witness(12);
    CHECK_THROWS_AS(extremal_route(g, w, RouteParams{Rat(1, 4), Rat(1, 100), Rat(0)}),
                    PreconditionError);  // 16*sqrt(eta) >= gamma
    CHECK_THROWS_AS(extremal_route(g, w, RouteParams{Rat(1, 3), Rat(0), Rat(0)}),
                    PreconditionError);  // gamma > 1/4
    auto small = gen_large_deg(8).first;
    CHECK_THROWS_AS(extremal_route(small, canonical_witness(8), RouteParams{Rat(1, 4), Rat(0), Rat(0)}),
                    PreconditionError);  // n < 3/gamma
}

TEST_CASE("certificate JSON round-trip and independent checking") {
    auto g = gen_large_deg(12).first;
    RouteCertificate cert =
        extremal_route(g, canonical_witness(12), RouteParams{Rat(1, 4), Rat(0), Rat(0)});
    RouteCertificate back = RouteCertificate::from_json(cert.to_json());
    CHECK(back.cycle.vertices == cert.cycle.vertices);
    CHECK(back.path.vertices == cert.path.vertices);
    CHECK(back.branch_trace == cert.branch_trace);
    check_certificate(g, back);

    RouteCertificate recolored = cert;
    recolored.cycle.color = other(recolored.cycle.color);
    CHECK_THROWS_WITH_AS(check_certificate(g, recolored),
                         doctest::Contains("edge not"), ValidationError);

    RouteCertificate truncated = cert;
    truncated.cycle.vertices.resize(4);
    truncated.cycle.vertices.clear();
    truncated.cycle.vertices = {cert.cycle.vertices.begin(), cert.cycle.vertices.begin() + 4};
    CHECK_THROWS_AS(check_certificate(g, truncated), ValidationError);

    CHECK_THROWS_AS(RouteCertificate::from_json("not json"), PreconditionError);
    CHECK_THROWS_AS(RouteCertificate::from_json("{}"), PreconditionError);
}
