#ifndef SPOOFSIM_ESTIMATOR_HPP
#define SPOOFSIM_ESTIMATOR_HPP

#include "spoofsim/scenario.hpp"
#include "spoofsim/spoofer.hpp"

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

namespace spoofsim {

class Rng;

/// Normalized receive-side echo after delay and Doppler compensation.
struct CompensatedEcho {
    std::vector<std::complex<double>> entries; // length N_r
    double compensation_hz = 0.0;
    bool noisy = false;
};

/// Compensated echo at an arbitrary compensation frequency. With a schedule
/// present the RIS term is included; without one the echo is the vehicle
/// return alone. `rng` non-null draws circular complex Gaussian noise with
/// per-entry variance sigma^2 T / (P gamma_B^2).
CompensatedEcho compensated_echo(const Scene& scene, const SpoofSchedule* schedule,
                                 double compensation_hz, Rng* rng);

/// Coarse-plus-refine search grid for the AoD estimate.
struct AngleGrid {
    double lo_deg = 1.0;
    double hi_deg = 179.0;
    double step_deg = 0.05;
    double refine_step_deg = 0.005;
};

struct MleEstimate {
    double theta_deg = 0.0;
    double objective = 0.0; // minimum of the fitted negative log-likelihood core
};

/// Least-squares template fit: argmin over the grid of
/// || echo - T beta_V b(theta) h(theta, theta_0) ||^2, ties to the lowest
/// angle, followed by one refinement pass around the coarse minimum.
MleEstimate mle_aod(const CompensatedEcho& echo, const Scene& scene, const AngleGrid& grid);

/// Report of the spoofed-objective decomposition check: the direct objective
/// and the perfect-objective-plus-cross-term form must differ by the
/// angle-independent constant ||delta y||^2 at every grid angle.
struct DecompositionReport {
    double max_rel_deviation = 0.0; // max |diff - mean(diff)| / mean(diff)
    double argmin_direct_deg = 0.0;
    double argmin_decomposed_deg = 0.0;
    bool same_argmin = false;
};

DecompositionReport mle_decomposition_check(const Scene& scene, const SpoofSchedule& schedule,
                                            const AngleGrid& grid, std::uint64_t seed);

/// Monte Carlo aggregate over independent noise realizations. Each trial
/// draws its own noise stream from (seed, trial), so results do not depend
/// on execution order.
struct MleResult {
    std::vector<double> spoofed_deg;   // per-trial spoofed estimates
    std::vector<double> perfect_deg;   // per-trial perfect-compensation estimates
    std::vector<double> objective_min; // per-trial spoofed objective minima
    double mean_spoofed_deg = 0.0;
    double std_spoofed_deg = 0.0;
    double mean_perfect_deg = 0.0;
    double std_perfect_deg = 0.0;
};

/// `compensation_hz` defaults to the schedule's effective spoofing frequency;
/// pass the matched-filter peak to model the full estimation pipeline.
MleResult monte_carlo_mle(const Scene& scene, const SpoofSchedule& schedule, int trials,
                          std::uint64_t seed, const AngleGrid& grid,
                          std::optional<double> compensation_hz = std::nullopt);

MleResult monte_carlo_mle_serial(const Scene& scene, const SpoofSchedule& schedule, int trials,
                                 std::uint64_t seed, const AngleGrid& grid,
                                 std::optional<double> compensation_hz = std::nullopt);

} // namespace spoofsim

#endif
