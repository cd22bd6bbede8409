#ifndef SPOOFSIM_SCENARIO_HPP
#define SPOOFSIM_SCENARIO_HPP

#include <complex>

namespace spoofsim {

/// Roadside-unit hardware parameters, all in linear units.
struct RsuConfig {
    int n_t = 32;               // transmit antennas
    int n_r = 32;               // receive antennas
    double power_w = 1.0;       // transmit power
    double noise_w = 1e-16;     // noise power
    double carrier_hz = 28e9;   // carrier frequency
    double beam_deg = 90.0;     // precoder steering direction theta_0
    double epoch_s = 0.010;     // sensing epoch T
};

/// Moving vehicle target. Position in the RSU-centered frame,
/// velocity along +x, radar cross-section in m^2.
struct VehicleTarget {
    double x_m = 0.0;
    double y_m = 0.0;
    double speed_mps = 10.0;
    double rcs_m2 = 5.011872336272722; // 7 dBsm
};

/// Adjustable-delay RIS. `elements == 0` models an absent RIS.
/// `area_m2` is the total reflecting aperture.
struct RisConfig {
    double x_m = 0.0;
    double y_m = 30.0;
    int elements = 32;
    double efficiency = 0.8;     // eta in (0, 1]
    double area_m2 = 0.05;       // aperture S
    double interval_s = 0.001;   // phase-update interval dT
    double max_delay_s = 1e-6;   // maximum adjustable delay
};

/// Scene: raw configuration plus every derived channel quantity used by the
/// closed forms. Immutable after build_scene.
struct Scene {
    RsuConfig rsu;
    VehicleTarget vu;
    RisConfig ris;

    double lambda_m = 0.0;
    double d_v_m = 0.0;
    double d_r_m = 0.0;
    double theta_v_deg = 0.0;
    double theta_r_deg = 0.0;
    double theta_b_deg = 0.0;   // RIS-side AoA/AoD; cancels out downstream
    double tau_v_s = 0.0;       // 2 d_V / c
    double tau_r_s = 0.0;       // delta_t_r + 2 d_R / c (= tau_v after alignment)
    double delta_t_r_s = 0.0;   // required adjustable delay 2 (d_V - d_R)/c
    double mu_v_hz = 0.0;       // echo Doppler of the vehicle
    double gamma_b = 0.0;       // sqrt(Nt*Nr)
    double kappa_r_m2 = 0.0;    // flat-plate RCS of the whole aperture
    int intervals_per_epoch = 0; // K = T / dT
    std::complex<double> beta_v; // two-way vehicle path gain
    std::complex<double> beta_r; // two-way RIS path gain (whole aperture)
};

/// Populates all derived quantities. Throws std::invalid_argument on
/// violated invariants (endfire geometry, zero distances, non-integer T/dT).
Scene build_scene(const RsuConfig& rsu, const VehicleTarget& vu, const RisConfig& ris);

/// Necessary condition for echo alignment: 0 <= 2(d_V - d_R)/c <= max delay.
bool delay_alignment_feasible(const Scene& scene);

/// Element count the surface needs before its echo can dominate the
/// vehicle return. Returns +inf when the beam puts theta_R exactly on a
/// transmit-pattern null (spoofing infeasible at this beam direction).
double element_count_threshold(const Scene& scene);

/// True when M >= margin * element_count_threshold (default margin 10).
bool element_count_sufficient(const Scene& scene, double margin = 10.0);

/// Doppler <-> velocity maps using the single-path convention
/// mu = v f_c cos(pi - theta_V) / c.
double doppler_from_velocity(const Scene& scene, double v_mps);
double velocity_from_doppler(const Scene& scene, double mu_hz);

} // namespace spoofsim

#endif
