// Benchmark of the dominance scan: serial reference vs the OpenMP plane loop,
// on the same inputs, with a bitwise comparison of the resulting reports.

#include <chrono>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "wallscan/scan.hpp"

using namespace wallscan;

namespace {

double seconds_since(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool same_planes(const ScanReport& a, const ScanReport& b) {
    if (a.planes.size() != b.planes.size()) return false;
    for (size_t i = 0; i < a.planes.size(); ++i) {
        const PlaneEntry& p = a.planes[i];
        const PlaneEntry& q = b.planes[i];
        if (!(p.u == q.u) || p.dominant != q.dominant || p.outermost != q.outermost ||
            p.outer_ties != q.outer_ties || p.live_chain != q.live_chain)
            return false;
    }
    return true;
}

} // namespace

int main() {
    const SurfacePreset f1 = preset_f1();
    ScanBounds bounds;
    bounds.max_cone_coeff = 24;
    bounds.max_length = 5;
    for (int k = 1; k <= 40; ++k) {
        bounds.u_grid.push_back(Rational(3 * k) / 40);
        bounds.u_grid.push_back(Rational(-3 * k) / 40);
    }

    const auto t_serial = std::chrono::steady_clock::now();
    const ScanReport serial =
        verify_rank2_conjecture(f1, bounds, ScanMode::Rank2OneNegative, ExecMode::Serial);
    const double s_serial = seconds_since(t_serial);

    const auto t_parallel = std::chrono::steady_clock::now();
    const ScanReport parallel =
        verify_rank2_conjecture(f1, bounds, ScanMode::Rank2OneNegative, ExecMode::OpenMP);
    const double s_parallel = seconds_since(t_parallel);

    int threads = 1;
#ifdef _OPENMP
    threads = omp_get_max_threads();
#endif

    std::printf("dominance scan: %s, coeff <= %ld, length <= %ld, %zu planes, %zu candidates\n",
                serial.surface.c_str(), bounds.max_cone_coeff, bounds.max_length,
                bounds.u_grid.size(), serial.candidates.size());
    std::printf("  serial  %8.3f s\n", s_serial);
    std::printf("  openmp  %8.3f s  (%d threads)\n", s_parallel, threads);
    std::printf("  speedup %8.2fx\n", s_parallel > 0 ? s_serial / s_parallel : 0.0);

    const bool ok = serial.passed() && parallel.passed() && same_planes(serial, parallel);
    std::printf("reports identical and violation-free: %s\n", ok ? "yes" : "NO");
    return ok ? 0 : 1;
}
