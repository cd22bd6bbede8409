#include "spoofsim/spoofer.hpp"
#include "spoofsim/arraykit.hpp"
#include "spoofsim/constants.hpp"

#include <cmath>
#include <stdexcept>

namespace spoofsim {

SpoofSchedule make_schedule(const Scene& scene, double mu_tilde_hz) {
    SpoofSchedule sch;
    sch.mu_tilde_hz = mu_tilde_hz;
    sch.interval_s = scene.ris.interval_s;
    sch.intervals_per_epoch = scene.intervals_per_epoch;
    sch.elements = scene.ris.elements;
    return sch;
}

double phase_shift(const SpoofSchedule& schedule, int element, double t_s) {
    if (element < 1 || element > schedule.elements)
        throw std::out_of_range("phase_shift: element index out of range");
    const double epoch = schedule.intervals_per_epoch * schedule.interval_s;
    if (t_s < 0.0 || t_s > epoch * (1.0 + 1e-12))
        throw std::invalid_argument("phase_shift: time outside the epoch");
    const double k = std::ceil(t_s / schedule.interval_s - 1e-12);
    double phase = std::fmod(kTwoPi * schedule.mu_tilde_hz * k * schedule.interval_s, kTwoPi);
    if (phase < 0.0)
        phase += kTwoPi;
    if (phase >= kTwoPi)
        phase = 0.0;
    return phase;
}

double effective_frequency(double mu_tilde_hz, double interval_s) {
    if (!(interval_s > 0.0))
        throw std::invalid_argument("effective_frequency: interval must be positive");
    const double period = 1.0 / interval_s;
    double r = std::fmod(mu_tilde_hz, period);
    if (r < 0.0)
        r += period;
    if (r == 0.0)
        r = period; // the set is (0, 1/dT], not [0, 1/dT)
    return r;
}

bool infeasible_set_member(double mu_hz, const Scene& scene) {
    const double x = (mu_hz - scene.mu_v_hz) * scene.ris.interval_s;
    const double n = std::round(x);
    return std::abs(x - n) <= 1e-9 * std::max(1.0, std::abs(x));
}

BeamCoefficients beam_coefficients(const Scene& scene) {
    const double cos0 = std::cos(deg2rad(scene.rsu.beam_deg));
    const double cosv = std::cos(deg2rad(scene.theta_v_deg));
    const double cosr = std::cos(deg2rad(scene.theta_r_deg));
    const double f_v = arraykit::dirichlet_f(scene.rsu.n_t, (kPi / 2.0) * (cos0 - cosv));
    const double f_r = arraykit::dirichlet_f(scene.rsu.n_t, (kPi / 2.0) * (cos0 - cosr));
    const double bv2 = std::norm(scene.beta_v);
    const double br2 = std::norm(scene.beta_r);
    return {bv2 * f_v * f_v, br2 * f_r * f_r};
}

namespace {

double margin_at(const Scene& scene, const BeamCoefficients& mt, double dmu) {
    const double dt = scene.ris.interval_s;
    const double epoch = scene.rsu.epoch_s;
    const int k = scene.intervals_per_epoch;
    const double mu_v = scene.mu_v_hz;
    const double s_d = arraykit::sinc(dmu * dt);
    const double s_v = arraykit::sinc(mu_v * dt);
    const double f_k = arraykit::dirichlet_f(k, kPi * dt * (mu_v - dmu));
    const double s_t = arraykit::sinc(epoch * (mu_v - dmu));
    const double bracket_r = s_d * s_d - s_v * s_v * f_k * f_k;
    const double bracket_v = 1.0 - s_t * s_t;
    return mt.c_r * bracket_r - mt.c_v * bracket_v;
}

template <bool Parallel>
FeasibleSet feasible_set_impl(const Scene& scene, double grid_resolution_hz) {
    if (!(grid_resolution_hz > 0.0))
        throw std::invalid_argument("feasible_set: grid resolution must be positive");
    const double period = 1.0 / scene.ris.interval_s;
    const auto count = static_cast<long>(std::floor(period / grid_resolution_hz + 1e-9));
    if (count < 1)
        throw std::invalid_argument("feasible_set: empty grid");

    FeasibleSet fs;
    fs.grid_hz.resize(static_cast<size_t>(count));
    fs.margin.resize(static_cast<size_t>(count));
    fs.mask.resize(static_cast<size_t>(count));
    const BeamCoefficients mt = beam_coefficients(scene);
    fs.c_v = mt.c_v;
    fs.c_r = mt.c_r;
    fs.element_threshold = element_count_threshold(scene);
    fs.element_count_ok = element_count_sufficient(scene);

    const double mu_v_reduced = effective_frequency(scene.mu_v_hz, scene.ris.interval_s);
    const double guard = 2.0 * grid_resolution_hz;

#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (Parallel)
#endif
    for (long i = 0; i < count; ++i) {
        const double dmu = grid_resolution_hz * static_cast<double>(i + 1);
        const double m = margin_at(scene, mt, dmu);
        bool feasible = m >= 0.0;
        if (infeasible_set_member(dmu, scene))
            feasible = false;
        // Circular distance on (0, 1/dT] to the reduced vehicle Doppler.
        double d = std::abs(dmu - mu_v_reduced);
        d = std::min(d, period - d);
        if (d <= guard * (1.0 + 1e-12))
            feasible = false;
        fs.grid_hz[static_cast<size_t>(i)] = dmu;
        fs.margin[static_cast<size_t>(i)] = m;
        fs.mask[static_cast<size_t>(i)] = feasible ? 1 : 0;
    }
    return fs;
}

} // namespace

FeasibleSet feasible_set(const Scene& scene, double grid_resolution_hz) {
    return feasible_set_impl<true>(scene, grid_resolution_hz);
}

FeasibleSet feasible_set_serial(const Scene& scene, double grid_resolution_hz) {
    return feasible_set_impl<false>(scene, grid_resolution_hz);
}

double spoof_margin(const Scene& scene, double delta_mu_hz) {
    return margin_at(scene, beam_coefficients(scene), delta_mu_hz);
}

std::optional<std::pair<double, double>> feasible_velocity_range(const FeasibleSet& fs,
                                                                 const Scene& scene) {
    double lo_mu = 0.0, hi_mu = 0.0;
    bool any = false;
    for (size_t i = 0; i < fs.grid_hz.size(); ++i) {
        if (!fs.mask[i])
            continue;
        if (!any) {
            lo_mu = hi_mu = fs.grid_hz[i];
            any = true;
        } else {
            lo_mu = std::min(lo_mu, fs.grid_hz[i]);
            hi_mu = std::max(hi_mu, fs.grid_hz[i]);
        }
    }
    if (!any)
        return std::nullopt;
    return std::make_pair(velocity_from_doppler(scene, lo_mu),
                          velocity_from_doppler(scene, hi_mu));
}

} // namespace spoofsim
