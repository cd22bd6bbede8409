#ifndef SPOOFSIM_AMBIGUITY_HPP
#define SPOOFSIM_AMBIGUITY_HPP

#include "spoofsim/scenario.hpp"
#include "spoofsim/spoofer.hpp"

#include <string>
#include <vector>

namespace spoofsim {

class Rng;

/// Matched-filter output C(tau_hat_V, mu) sampled on a frequency grid,
/// restricted to the aligned-delay slice.
struct AmbiguitySurface {
    enum class Method { oracle, closed_form, approximation };

    std::vector<double> mu_grid_hz;
    std::vector<double> values;
    double peak_mu_hz = 0.0;
    Method method = Method::closed_form;
};

const char* method_name(AmbiguitySurface::Method m);

/// Direct numerical evaluation of the matched filter: integrates the
/// per-antenna composite echo over the epoch at each grid frequency. The
/// integrand is a pure complex exponential on each phase interval, so the
/// integration is piecewise exact; `time_steps` (>= 100 K) only gates the
/// trapezoid sanity path below. Steering products are evaluated by explicit
/// element sums, keeping this path independent of the closed-form algebra.
/// `noise_rng` non-null adds the matched-filtered receiver noise (a
/// band-limited draw, correlated across grid frequencies); off by default,
/// intended for demonstration plots.
AmbiguitySurface surface_oracle(const Scene& scene, const SpoofSchedule& schedule,
                                const std::vector<double>& mu_grid_hz, int time_steps,
                                Rng* noise_rng = nullptr);

AmbiguitySurface surface_oracle_serial(const Scene& scene, const SpoofSchedule& schedule,
                                       const std::vector<double>& mu_grid_hz, int time_steps,
                                       Rng* noise_rng = nullptr);

/// Trapezoid-rule variant of the oracle with `time_steps` samples. Slower
/// and discretization-limited; kept as a sanity check on the exact path.
AmbiguitySurface surface_oracle_trapezoid(const Scene& scene, const SpoofSchedule& schedule,
                                          const std::vector<double>& mu_grid_hz, int time_steps);

/// Exact closed form of the aligned-delay matched-filter slice: per-antenna
/// complex sum, squared magnitude, summed over receive antennas.
AmbiguitySurface surface_closed_form(const Scene& scene, const SpoofSchedule& schedule,
                                     const std::vector<double>& mu_grid_hz);

AmbiguitySurface surface_closed_form_serial(const Scene& scene, const SpoofSchedule& schedule,
                                            const std::vector<double>& mu_grid_hz);

/// Separable two-term approximation (cross products dropped). Rejects
/// spoofing frequencies in the infeasible set, where the premise fails.
AmbiguitySurface surface_approx(const Scene& scene, double delta_mu_tilde_hz,
                                const std::vector<double>& mu_grid_hz);

/// Grid argmax; ties break toward the lowest frequency.
double peak(const AmbiguitySurface& surface);

/// Convenience: uniform grid {res, 2 res, ..., 1/dT}.
std::vector<double> uniform_mu_grid(const Scene& scene, double resolution_hz);

} // namespace spoofsim

#endif
