#include "bimono/random.hpp"

#include "bimono/errors.hpp"

namespace bimono {

std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

namespace {

// Exact comparison of v/2^64 against p/q via 128-bit products.
bool coin(std::uint64_t v, const Rat& prob) {
    auto p = static_cast<unsigned __int128>(prob.numerator());
    auto q = static_cast<unsigned __int128>(prob.denominator());
    return static_cast<unsigned __int128>(v) * q < (p << 64);
}

}  // namespace

ColoredBigraph random_coloring(int n, const Rat& red_prob, const Rat& blue_prob,
                               std::uint64_t seed) {
    for (const Rat& p : {red_prob, blue_prob})
        if (p < Rat(0) || p > Rat(1))
            throw PreconditionError("random_coloring: probability outside [0, 1]");
    EdgeList red, blue;
    std::uint64_t base = splitmix64(seed);
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            std::uint64_t counter = 2ULL * (static_cast<std::uint64_t>(x) * n + y);
            if (coin(splitmix64(base + counter), red_prob)) red.emplace_back(x, y);
            if (coin(splitmix64(base + counter + 1), blue_prob)) blue.emplace_back(x, y);
        }
    }
    return {n, red, blue};
}

ColoredBigraph random_coloring_with_floor(int n, const Rat& red_prob, const Rat& blue_prob,
                                          std::uint64_t seed, int min_degree_floor,
                                          int max_retries) {
    for (int attempt = 0; attempt < max_retries; ++attempt) {
        ColoredBigraph g = random_coloring(n, red_prob, blue_prob,
                                           seed + 0x51ed270b0529f4d5ULL * attempt);
        if (g.min_degree() >= min_degree_floor) return g;
    }
    throw PreconditionError("random_coloring: min-degree floor unmet after bounded retries");
}

}  // namespace bimono
