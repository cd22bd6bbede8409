// Serial-vs-OpenMP timing for the data-parallel kernels: ambiguity-surface
// evaluation, feasible-set computation, and the Monte Carlo estimator.

#include "spoofsim/ambiguity.hpp"
#include "spoofsim/config.hpp"
#include "spoofsim/estimator.hpp"
#include "spoofsim/spoofer.hpp"

#include <chrono>
#include <cstdio>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

double time_ms(const std::function<void()>& fn, int reps) {
    const auto t0 = std::chrono::steady_clock::now();
    for (int i = 0; i < reps; ++i)
        fn();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

void row(const char* name, double serial_ms, double parallel_ms) {
    std::printf("%-28s %10.2f ms %10.2f ms %8.2fx\n", name, serial_ms, parallel_ms,
                serial_ms / parallel_ms);
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; both columns run serially\n");
#endif
    std::printf("%-28s %13s %13s %9s\n", "kernel", "serial", "parallel", "speedup");

    spoofsim::Config cfg;
    cfg.set("rsu.beam_deg", "90");
    const spoofsim::Scene scene = cfg.scene();
    const spoofsim::SpoofSchedule schedule = spoofsim::make_schedule(scene, 500.0);
    const auto grid = spoofsim::uniform_mu_grid(scene, 0.25);

    row("closed-form surface (4k)",
        time_ms([&] { (void)spoofsim::surface_closed_form_serial(scene, schedule, grid); }, 5),
        time_ms([&] { (void)spoofsim::surface_closed_form(scene, schedule, grid); }, 5));

    row("oracle surface (4k)",
        time_ms([&] { (void)spoofsim::surface_oracle_serial(scene, schedule, grid, 1000); }, 5),
        time_ms([&] { (void)spoofsim::surface_oracle(scene, schedule, grid, 1000); }, 5));

    row("feasible set (20k)",
        time_ms([&] { (void)spoofsim::feasible_set_serial(scene, 0.05); }, 5),
        time_ms([&] { (void)spoofsim::feasible_set(scene, 0.05); }, 5));

    const spoofsim::AngleGrid angle_grid;
    row("monte carlo MLE (200)",
        time_ms([&] { (void)spoofsim::monte_carlo_mle_serial(scene, schedule, 200, 1,
                                                             angle_grid); }, 1),
        time_ms([&] { (void)spoofsim::monte_carlo_mle(scene, schedule, 200, 1, angle_grid); }, 1));
    return 0;
}
