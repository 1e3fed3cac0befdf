// Compares the cached/OpenMP sweep against the serial reference on a
// synthetic point cloud.  Usage: bench_sweep [n_points] [radius]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <vector>

#include "hdg/hdg.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace hdg;
using clock_type = std::chrono::steady_clock;

namespace {

Hyperdigraph synthetic_cloud(int n, double radius, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> jitter(-0.25, 0.25);
    std::vector<std::vector<double>> coords;
    coords.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double angle = 2.0 * M_PI * i / n;
        // quarter-unit grid snapping keeps tie distances and caps the
        // number of critical values
        auto snap = [](double x) { return std::round(x * 4.0) / 4.0; };
        coords.push_back({snap(3.0 * std::cos(angle) + jitter(rng)),
                          snap(3.0 * std::sin(angle) + jitter(rng))});
    }
    auto dist = [&](int i, int j) {
        const double dx = coords[static_cast<size_t>(i)][0] - coords[static_cast<size_t>(j)][0];
        const double dy = coords[static_cast<size_t>(i)][1] - coords[static_cast<size_t>(j)][1];
        return std::sqrt(dx * dx + dy * dy);
    };

    std::vector<DirectedHyperedge> edges;
    for (VertexId v = 0; v < n; ++v) edges.push_back(DirectedHyperedge{{v}});
    for (VertexId i = 0; i < n; ++i)
        for (VertexId j = 0; j < n; ++j)
            if (i != j && dist(i, j) <= radius) edges.push_back(DirectedHyperedge{{i, j}});
    for (VertexId i = 0; i < n; ++i)
        for (VertexId j = i + 1; j < n; ++j)
            for (VertexId k = j + 1; k < n; ++k)
                if (dist(i, j) <= radius && dist(i, k) <= radius && dist(j, k) <= radius)
                    edges.push_back(DirectedHyperedge{{i, j, k}});
    return Hyperdigraph::make(n, std::move(edges), std::move(coords));
}

double run_ms(const std::function<SweepResult()>& fn, SweepResult& out) {
    const auto start = clock_type::now();
    out = fn();
    const auto stop = clock_type::now();
    return std::chrono::duration<double, std::milli>(stop - start).count();
}

bool same_results(const SweepResult& a, const SweepResult& b) {
    if (a.rows.size() != b.rows.size()) return false;
    for (size_t i = 0; i < a.rows.size(); ++i)
        for (size_t d = 0; d < a.rows[i].entries.size(); ++d) {
            if (a.rows[i].entries[d].betti != b.rows[i].entries[d].betti) return false;
            if (a.rows[i].entries[d].spectrum != b.rows[i].entries[d].spectrum) return false;
        }
    return true;
}

} // namespace

int main(int argc, char** argv) {
    const int n = argc > 1 ? std::atoi(argv[1]) : 20;
    const double radius = argc > 2 ? std::atof(argv[2]) : 3.2;

    const auto cloud = synthetic_cloud(n, radius, 7);
    const auto filtration = distance_filtration(cloud);
    SweepSpec spec;

    std::printf("cloud: %d points, %td edges, %zu critical values\n", n, cloud.total_edges(),
                filtration.critical_values().size());

    SweepResult reference, cached_serial, cached_parallel;
    const double t_ref = run_ms([&] { return sweep_reference(filtration, spec); }, reference);
    const double t_ser =
        run_ms([&] { return sweep(filtration, spec, /*parallel=*/false); }, cached_serial);
    const double t_par =
        run_ms([&] { return sweep(filtration, spec, /*parallel=*/true); }, cached_parallel);

    int threads = 1;
#ifdef _OPENMP
    threads = omp_get_max_threads();
#endif
    std::printf("reference (no cache, serial) : %9.2f ms\n", t_ref);
    std::printf("cached, serial               : %9.2f ms   (%.2fx)\n", t_ser, t_ref / t_ser);
    std::printf("cached, %2d thread(s)         : %9.2f ms   (%.2fx)\n", threads, t_par,
                t_ref / t_par);

    const bool ok = same_results(reference, cached_serial) && same_results(reference, cached_parallel);
    std::printf("results identical            : %s\n", ok ? "yes" : "NO");
    return ok ? 0 : 1;
}
