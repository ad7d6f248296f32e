#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <string>

#include "bimono/errors.hpp"

namespace bimono {

// Ratio quantities (delta, eta, gamma, theta) are exchanged as exact
// rationals to avoid float tie ambiguity at small n.
using Rat = boost::rational<std::int64_t>;

inline Rat rat(std::int64_t p, std::int64_t q = 1) { return Rat(p, q); }

// ceil(r) as an integer
inline std::int64_t rat_ceil(const Rat& r) {
    std::int64_t q = r.numerator() / r.denominator();
    if (r.numerator() % r.denominator() != 0 && r.numerator() > 0) ++q;
    return q;
}

inline std::int64_t rat_floor(const Rat& r) {
    std::int64_t q = r.numerator() / r.denominator();
    if (r.numerator() % r.denominator() != 0 && r.numerator() < 0) --q;
    return q;
}

// Parses "p/q", "p", or a bare "0". Throws PreconditionError on garbage.
Rat parse_rat(const std::string& s);

std::string to_string(const Rat& r);

}  // namespace bimono
