#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bimono/families.hpp"
#include "bimono/long_routes.hpp"

using namespace bimono;

TEST_CASE("large-deg block structure") {
    auto [g, claims] = gen_large_deg(5);
    CHECK(g.edge_count() == 25);  // K_{5,5}, every pair colored
    CHECK(claims.min_degree == 5);
    CHECK(claims.longest_mono_path == 6);
    CHECK(claims.longest_mono_cycle == 6);
    CHECK(g.min_degree() == 5);
    // blue within aligned halves, red across
    CHECK(g.has_edge(Color::Blue, 0, 0));
    CHECK(g.has_edge(Color::Red, 0, 4));
    CHECK(!g.has_edge(Color::Red, 0, 0));
    CHECK(!g.has_edge(Color::Blue, 0, 4));
}

TEST_CASE("medium-deg claims at the spec anchor") {
    auto [g, claims] = gen_medium_deg(8, 0);
    CHECK(claims.min_degree == 6);
    CHECK(claims.longest_mono_path == 8);
    CHECK(claims.longest_mono_cycle == 8);
    CHECK(g.min_degree() == 6);
}

TEST_CASE("family preconditions") {
    CHECK_THROWS_AS(gen_cycle_extremal(4), PreconditionError);
    CHECK_THROWS_AS(gen_medium_deg(10, 0), PreconditionError);
    CHECK_THROWS_AS(gen_medium_deg(12, 2), PreconditionError);
    CHECK_THROWS_AS(gen_small_deg(6, 3), PreconditionError);
    CHECK_THROWS_AS(gen_large_deg(0), PreconditionError);
}

TEST_CASE("determinism: identical serialization on repeat") {
    for (int n : {3, 7, 12}) {
        CHECK(gen_large_deg(n).first.serialize() == gen_large_deg(n).first.serialize());
    }
    CHECK(gen_small_deg(9, 3).first.serialize() == gen_small_deg(9, 3).first.serialize());
}

TEST_CASE("claims equal the exact oracle across the desk grid") {
    auto check_claims = [](const ColoredBigraph& g, const FamilyClaims& claims) {
        CHECK(g.min_degree() == claims.min_degree);
        CHECK(longest_mono_path_exact(g).order() == claims.longest_mono_path);
        auto cyc = longest_mono_cycle_exact(g);
        CHECK((cyc ? cyc->length() : 0) == claims.longest_mono_cycle);
    };
    for (int n = 1; n <= 10; ++n) {
        auto [g, claims] = gen_large_deg(n);
        check_claims(g, claims);
    }
    for (int n = 4; n <= 12; n += 4)
        for (int k = 0; 12 * k <= n; ++k) {
            auto [g, claims] = gen_medium_deg(n, k);
            check_claims(g, claims);
        }
    for (int n = 1; n <= 9; ++n)
        for (int k = 0; 3 * k <= n; ++k) {
            auto [g, claims] = gen_small_deg(n, k);
            check_claims(g, claims);
        }
    for (int n = 3; n <= 9; n += 2) {
        auto [g, claims] = gen_cycle_extremal(n);
        check_claims(g, claims);
    }
}

TEST_CASE("claims sidecar JSON") {
    auto claims = gen_large_deg(5).second;
    CHECK(claims.to_json() ==
          "{\"min_degree\": 5, \"longest_mono_path\": 6, \"longest_mono_cycle\": 6}");
}

TEST_CASE("family name round-trip") {
    for (Family f : {Family::LargeDeg, Family::MediumDeg, Family::SmallDeg,
                     Family::CycleExtremal})
        CHECK(family_from_name(family_name(f)) == f);
    CHECK_THROWS_AS(family_from_name("huge-deg"), PreconditionError);
}
