#include "spoofsim/scenario.hpp"
#include "spoofsim/arraykit.hpp"
#include "spoofsim/constants.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace spoofsim {

namespace {

std::complex<double> path_gain(double lambda, double kappa, double distance) {
    const double mag = std::sqrt(lambda * lambda * kappa /
                                 (64.0 * kPi * kPi * kPi * std::pow(distance, 4)));
    const double phase = std::fmod(4.0 * kPi * distance / lambda, kTwoPi);
    return std::polar(mag, phase);
}

double bearing_deg(double x, double y) {
    return rad2deg(std::atan2(y, x));
}

} // namespace

Scene build_scene(const RsuConfig& rsu, const VehicleTarget& vu, const RisConfig& ris) {
    if (rsu.n_t < 1 || rsu.n_r < 1)
        throw std::invalid_argument("scene: antenna counts must be >= 1");
    if (!(rsu.power_w > 0.0) || !(rsu.noise_w > 0.0))
        throw std::invalid_argument("scene: power and noise must be positive");
    if (!(rsu.beam_deg > 0.0 && rsu.beam_deg < 180.0))
        throw std::invalid_argument("scene: beam direction must lie strictly in (0, 180) degrees");
    if (!(rsu.epoch_s > 0.0) || !(ris.interval_s > 0.0))
        throw std::invalid_argument("scene: epoch and phase interval must be positive");
    if (ris.elements < 0)
        throw std::invalid_argument("scene: element count must be >= 0");
    if (!(ris.efficiency > 0.0 && ris.efficiency <= 1.0))
        throw std::invalid_argument("scene: reflection efficiency must lie in (0, 1]");
    if (!(ris.area_m2 > 0.0))
        throw std::invalid_argument("scene: RIS area must be positive");
    if (!(vu.rcs_m2 > 0.0))
        throw std::invalid_argument("scene: vehicle RCS must be positive");

    Scene s;
    s.rsu = rsu;
    s.vu = vu;
    s.ris = ris;

    s.lambda_m = kSpeedOfLight / rsu.carrier_hz;
    s.d_v_m = std::hypot(vu.x_m, vu.y_m);
    s.d_r_m = std::hypot(ris.x_m, ris.y_m);
    if (!(s.d_v_m > 0.0) || !(s.d_r_m > 0.0))
        throw std::invalid_argument("scene: target and RIS distances must be positive");

    s.theta_v_deg = bearing_deg(vu.x_m, vu.y_m);
    s.theta_r_deg = bearing_deg(ris.x_m, ris.y_m);
    if (!(s.theta_v_deg > 0.0 && s.theta_v_deg < 180.0))
        throw std::invalid_argument("scene: vehicle AoD must lie strictly in (0, 180) degrees");
    if (!(s.theta_r_deg > 0.0 && s.theta_r_deg < 180.0))
        throw std::invalid_argument("scene: RIS AoD must lie strictly in (0, 180) degrees");
    // Angle of the RSU as seen from the RIS. Stored for completeness; every
    // closed form cancels it.
    s.theta_b_deg = bearing_deg(-ris.x_m, -ris.y_m);
    if (s.theta_b_deg < 0.0)
        s.theta_b_deg += 360.0;

    s.tau_v_s = 2.0 * s.d_v_m / kSpeedOfLight;
    s.delta_t_r_s = 2.0 * (s.d_v_m - s.d_r_m) / kSpeedOfLight;
    s.tau_r_s = s.delta_t_r_s + 2.0 * s.d_r_m / kSpeedOfLight;

    s.mu_v_hz = vu.speed_mps * rsu.carrier_hz *
                std::cos(kPi - deg2rad(s.theta_v_deg)) / kSpeedOfLight;
    s.gamma_b = std::sqrt(static_cast<double>(rsu.n_t) * rsu.n_r);

    const double ratio = rsu.epoch_s / ris.interval_s;
    const double rounded = std::round(ratio);
    if (rounded < 1.0 || std::abs(ratio - rounded) > 1e-9 * rounded)
        throw std::invalid_argument("scene: epoch must be an integer multiple of the phase interval");
    s.intervals_per_epoch = static_cast<int>(rounded);

    s.kappa_r_m2 = 4.0 * kPi * ris.efficiency * ris.area_m2 * ris.area_m2 /
                   (s.lambda_m * s.lambda_m);
    s.beta_v = path_gain(s.lambda_m, vu.rcs_m2, s.d_v_m);
    s.beta_r = (ris.elements == 0)
                   ? std::complex<double>(0.0, 0.0)
                   : path_gain(s.lambda_m, s.kappa_r_m2, s.d_r_m);
    return s;
}

bool delay_alignment_feasible(const Scene& scene) {
    return scene.delta_t_r_s >= 0.0 && scene.delta_t_r_s <= scene.ris.max_delay_s;
}

double element_count_threshold(const Scene& scene) {
    const double x_v = (kPi / 2.0) * (std::cos(deg2rad(scene.rsu.beam_deg)) -
                                      std::cos(deg2rad(scene.theta_v_deg)));
    const double x_r = (kPi / 2.0) * (std::cos(deg2rad(scene.rsu.beam_deg)) -
                                      std::cos(deg2rad(scene.theta_r_deg)));
    const double f_v = arraykit::dirichlet_f(scene.rsu.n_t, x_v);
    const double f_r = arraykit::dirichlet_f(scene.rsu.n_t, x_r);
    if (f_r == 0.0)
        return std::numeric_limits<double>::infinity();
    return std::sqrt(scene.vu.rcs_m2 / (4.0 * kPi * scene.ris.efficiency)) *
           (scene.lambda_m / scene.ris.area_m2) * std::abs(f_v / f_r);
}

bool element_count_sufficient(const Scene& scene, double margin) {
    const double threshold = element_count_threshold(scene);
    return static_cast<double>(scene.ris.elements) >= margin * threshold;
}

double doppler_from_velocity(const Scene& scene, double v_mps) {
    return v_mps * scene.rsu.carrier_hz *
           std::cos(kPi - deg2rad(scene.theta_v_deg)) / kSpeedOfLight;
}

double velocity_from_doppler(const Scene& scene, double mu_hz) {
    return mu_hz * kSpeedOfLight /
           (scene.rsu.carrier_hz * std::cos(kPi - deg2rad(scene.theta_v_deg)));
}

} // namespace spoofsim
