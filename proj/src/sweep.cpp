#include "bimono/sweep.hpp"

#include <algorithm>
#include <vector>

#include "bimono/errors.hpp"
#include "bimono/long_routes.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bimono {

ColoredBigraph coloring_from_index(int n, std::uint64_t code) {
    if (n < 1 || n > 8) throw PreconditionError("coloring_from_index: need 1 <= n <= 8");
    EdgeList red, blue;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            ((code >> (x * n + y)) & 1 ? red : blue).emplace_back(x, y);
    return {n, red, blue};
}

void SweepResult::merge(const SweepResult& o) {
    colorings += o.colorings;
    path_violations += o.path_violations;
    cycle_violations += o.cycle_violations;
    min_path = std::min(min_path, o.min_path);
    min_cycle = std::min(min_cycle, o.min_cycle);
}

namespace {

SweepResult sweep_one(int n, std::uint64_t code) {
    ColoredBigraph g = coloring_from_index(n, code);
    SweepResult r;
    r.colorings = 1;
    PathResult p = longest_mono_path_exact(g);
    r.min_path = p.order();
    if (p.order() < 2 * ((n + 1) / 2)) r.path_violations = 1;
    auto c = longest_mono_cycle_exact(g);
    int clen = c ? c->length() : 0;
    r.min_cycle = clen;
    if (2 * (n / 2) >= 4 && clen < 2 * (n / 2)) r.cycle_violations = 1;
    return r;
}

}  // namespace

SweepResult sweep_serial(int n, std::uint64_t lo, std::uint64_t hi) {
    SweepResult total;
    for (std::uint64_t code = lo; code < hi; ++code) total.merge(sweep_one(n, code));
    return total;
}

SweepResult sweep_parallel(int n, std::uint64_t lo, std::uint64_t hi, int jobs) {
#ifdef _OPENMP
    if (jobs > 0) omp_set_num_threads(jobs);
    SweepResult total;
    long long span = static_cast<long long>(hi - lo);
#pragma omp parallel
    {
        SweepResult local;
#pragma omp for schedule(dynamic, 256)
        for (long long i = 0; i < span; ++i)
            local.merge(sweep_one(n, lo + static_cast<std::uint64_t>(i)));
#pragma omp critical
        total.merge(local);
    }
    return total;
#else
    (void)jobs;
    return sweep_serial(n, lo, hi);
#endif
}

}  // namespace bimono
