// Compares the serial reference sweep against the OpenMP kernel on the full
// K_{3,3} space and a K_{4,4} shard, checking that both agree exactly.
#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "bimono/sweep.hpp"

using namespace bimono;
using Clock = std::chrono::steady_clock;

namespace {

double time_ms(Clock::time_point a, Clock::time_point b) {
    return std::chrono::duration<double, std::milli>(b - a).count();
}

int bench(const char* label, int n, std::uint64_t lo, std::uint64_t hi) {
    auto t0 = Clock::now();
    SweepResult serial = sweep_serial(n, lo, hi);
    auto t1 = Clock::now();
    SweepResult parallel = sweep_parallel(n, lo, hi);
    auto t2 = Clock::now();
    double ts = time_ms(t0, t1), tp = time_ms(t1, t2);
    std::printf("%-12s colorings=%llu min_path=%d min_cycle=%d serial=%.1fms parallel=%.1fms speedup=%.2fx\n",
                label, static_cast<unsigned long long>(serial.colorings), serial.min_path,
                serial.min_cycle, ts, tp, tp > 0 ? ts / tp : 0.0);
    if (serial.colorings != parallel.colorings || serial.min_path != parallel.min_path ||
        serial.min_cycle != parallel.min_cycle ||
        serial.path_violations != parallel.path_violations ||
        serial.cycle_violations != parallel.cycle_violations) {
        std::fprintf(stderr, "MISMATCH between serial and parallel results\n");
        return 1;
    }
    return 0;
}

}  // namespace

int main() {
    int rc = 0;
    rc |= bench("K33 full", 3, 0, 1ULL << 9);
    rc |= bench("K44 shard", 4, 0, 1ULL << 13);
    return rc;
}
