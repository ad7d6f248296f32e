#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bimono/long_routes.hpp"
#include "bimono/sweep.hpp"

using namespace bimono;

TEST_CASE("coloring_from_index encodes bit-per-edge") {
    ColoredBigraph all_blue = coloring_from_index(3, 0);
    CHECK(all_blue.color_edge_total(Color::Blue) == 9);
    CHECK(all_blue.color_edge_total(Color::Red) == 0);

    ColoredBigraph all_red = coloring_from_index(3, (1U << 9) - 1);
    CHECK(all_red.color_edge_total(Color::Red) == 9);
    CHECK(all_red.color_edge_total(Color::Blue) == 0);

    ColoredBigraph one = coloring_from_index(2, 0b0100);  // bit x*n+y = 2 -> (1,0) red
    CHECK(one.has_edge(Color::Red, 1, 0));
    CHECK(one.color_edge_total(Color::Red) == 1);
    CHECK_THROWS_AS(coloring_from_index(9, 0), PreconditionError);
}

TEST_CASE("shards cover the space exactly once and merge associatively") {
    const int n = 3;
    const std::uint64_t total = 1ULL << (n * n);
    SweepResult full = sweep_serial(n, 0, total);
    CHECK(full.colorings == total);

    SweepResult merged;
    std::uint64_t covered = 0;
    for (std::uint64_t lo = 0; lo < total; lo += 100) {
        SweepResult shard = sweep_serial(n, lo, std::min(lo + 100, total));
        covered += shard.colorings;
        merged.merge(shard);
    }
    CHECK(covered == total);
    CHECK(merged.colorings == full.colorings);
    CHECK(merged.min_path == full.min_path);
    CHECK(merged.min_cycle == full.min_cycle);
    CHECK(merged.path_violations == full.path_violations);
    CHECK(merged.cycle_violations == full.cycle_violations);
}

TEST_CASE("parallel kernel equals the serial reference") {
    for (int n : {2, 3}) {
        std::uint64_t total = 1ULL << (n * n);
        SweepResult s = sweep_serial(n, 0, total);
        SweepResult p = sweep_parallel(n, 0, total, 2);
        CHECK(s.colorings == p.colorings);
        CHECK(s.min_path == p.min_path);
        CHECK(s.min_cycle == p.min_cycle);
        CHECK(s.path_violations == p.path_violations);
        CHECK(s.cycle_violations == p.cycle_violations);
    }
}

TEST_CASE("tiny-n sweeps meet the path law") {
    for (int n : {1, 2, 3}) {
        SweepResult r = sweep_serial(n, 0, 1ULL << (n * n));
        CHECK(r.path_violations == 0);
        CHECK(r.min_path >= 2 * ((n + 1) / 2));
    }
}
