#ifndef SPOOFSIM_SPOOFER_HPP
#define SPOOFSIM_SPOOFER_HPP

#include "spoofsim/scenario.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace spoofsim {

/// Time-varying RIS phase plan. All M elements share the same spoofing
/// frequency (the fundamental equal-frequency case).
struct SpoofSchedule {
    double mu_tilde_hz = 0.0;     // target spoofing frequency, equal per element
    double interval_s = 0.001;    // dT
    int intervals_per_epoch = 0;  // K
    int elements = 0;             // M
};

/// Builds the schedule for a scene. mu_tilde may exceed 1/dT; the effective
/// frequency is its alias in (0, 1/dT].
SpoofSchedule make_schedule(const Scene& scene, double mu_tilde_hz);

/// Discrete phase shift phi_m(t) = (2 pi mu_m ceil(t/dT) dT) mod 2 pi,
/// piecewise constant on ((k-1) dT, k dT]. Element index is 1-based.
double phase_shift(const SpoofSchedule& schedule, int element, double t_s);

/// Alias reduction: mu mod (1/dT) mapped into (0, 1/dT] (exact multiples of
/// 1/dT return 1/dT, not 0).
double effective_frequency(double mu_tilde_hz, double interval_s);

/// Membership in the infeasible set {mu_V + n/dT}: true iff (mu - mu_V) dT
/// is an integer within 1e-9 relative tolerance.
bool infeasible_set_member(double mu_hz, const Scene& scene);

/// Result of the feasible-spoofing-set evaluation over a frequency grid.
struct FeasibleSet {
    std::vector<double> grid_hz;     // candidates in (0, 1/dT]
    std::vector<double> margin;      // signed inequality margin per candidate
    std::vector<std::uint8_t> mask;  // 1 = feasible
    double c_v = 0.0;                // beamformed VU power coefficient
    double c_r = 0.0;                // beamformed RIS power coefficient
    double element_threshold = 0.0;
    bool element_count_ok = true;    // false => evaluation proceeded with a warning
};

/// Evaluates the feasible-set margin on the grid {res, 2 res, ..., 1/dT}.
/// A candidate is feasible when its margin is >= 0, except that members of
/// the infeasible set and candidates within two grid steps of the reduced
/// vehicle Doppler are forced infeasible (the separable approximation the
/// margin is built on has no validity there).
FeasibleSet feasible_set(const Scene& scene, double grid_resolution_hz);

/// Serial reference of feasible_set; identical output, no OpenMP.
FeasibleSet feasible_set_serial(const Scene& scene, double grid_resolution_hz);

/// Squared path gains after the transmit beam pattern, the C_V / C_R
/// coefficients shared by the margin and the separable approximation.
struct BeamCoefficients {
    double c_v = 0.0;
    double c_r = 0.0;
};
BeamCoefficients beam_coefficients(const Scene& scene);

/// Margin of a single candidate (same expression the set evaluation uses).
double spoof_margin(const Scene& scene, double delta_mu_hz);

/// Image of the feasible frequencies under the velocity map; std::nullopt
/// when the mask is all false.
std::optional<std::pair<double, double>> feasible_velocity_range(const FeasibleSet& fs,
                                                                 const Scene& scene);

} // namespace spoofsim

#endif
