#include "spoofsim/estimator.hpp"
#include "spoofsim/arraykit.hpp"
#include "spoofsim/constants.hpp"
#include "spoofsim/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace spoofsim {

using arraykit::cplx;

namespace {

double noise_variance(const Scene& scene) {
    return scene.rsu.noise_w * scene.rsu.epoch_s /
           (scene.rsu.power_w * scene.gamma_b * scene.gamma_b);
}

// Template coefficient c(theta) = T beta_V h(theta, theta_0); the model
// vector is c(theta) b(theta).
cplx template_coef(const Scene& scene, double theta_deg) {
    return scene.rsu.epoch_s * scene.beta_v *
           arraykit::h_factor(theta_deg, scene.rsu.beam_deg, scene.rsu.n_t);
}

cplx vu_coef(const Scene& scene, double comp_mu) {
    const double epoch = scene.rsu.epoch_s;
    const double off = comp_mu - scene.mu_v_hz;
    return scene.rsu.epoch_s * scene.beta_v *
           arraykit::h_factor(scene.theta_v_deg, scene.rsu.beam_deg, scene.rsu.n_t) *
           arraykit::sinc(epoch * off) * std::polar(1.0, -kPi * off * epoch);
}

cplx ris_coef(const Scene& scene, const SpoofSchedule& schedule, double comp_mu) {
    if (schedule.elements == 0 || std::abs(scene.beta_r) == 0.0)
        return cplx(0.0, 0.0);
    const double epoch = scene.rsu.epoch_s;
    const double dt = scene.ris.interval_s;
    const double mu_t = schedule.mu_tilde_hz;
    return scene.rsu.epoch_s * scene.beta_r *
           arraykit::h_factor(scene.theta_r_deg, scene.rsu.beam_deg, scene.rsu.n_t) *
           arraykit::sinc(comp_mu * dt) *
           arraykit::dirichlet_f(scene.intervals_per_epoch, kPi * dt * (comp_mu - mu_t)) *
           std::polar(1.0, kPi * mu_t * dt - kPi * (comp_mu - mu_t) * epoch);
}

std::vector<cplx> deterministic_echo(const Scene& scene, const SpoofSchedule* schedule,
                                     double comp_mu) {
    const auto b_v = arraykit::steering_vector(scene.theta_v_deg, scene.rsu.n_r);
    const cplx cv = vu_coef(scene, comp_mu);
    std::vector<cplx> y(static_cast<size_t>(scene.rsu.n_r), cplx(0.0, 0.0));
    for (int n = 0; n < scene.rsu.n_r; ++n)
        y[static_cast<size_t>(n)] = cv * b_v.elements[static_cast<size_t>(n)];
    if (schedule != nullptr) {
        const auto b_r = arraykit::steering_vector(scene.theta_r_deg, scene.rsu.n_r);
        const cplx cr = ris_coef(scene, *schedule, comp_mu);
        for (int n = 0; n < scene.rsu.n_r; ++n)
            y[static_cast<size_t>(n)] += cr * b_r.elements[static_cast<size_t>(n)];
    }
    return y;
}

void add_noise(std::vector<cplx>& y, const Scene& scene, Rng& rng) {
    const double s = std::sqrt(noise_variance(scene) / 2.0);
    for (auto& e : y)
        e += cplx(s * rng.normal(), s * rng.normal());
}

// Precomputed search grid: angles, template coefficients and conjugated
// steering entries, so each trial costs one pass of multiply-accumulate.
struct SearchTable {
    std::vector<double> thetas;
    std::vector<cplx> coef;       // c(theta)
    std::vector<cplx> bconj;      // conj(b_n(theta)), antenna-major per angle
    int n_r = 0;
};

SearchTable build_table(const Scene& scene, double lo, double hi, double step) {
    if (!(step > 0.0) || !(hi >= lo))
        throw std::invalid_argument("mle_aod: empty angle grid");
    SearchTable t;
    t.n_r = scene.rsu.n_r;
    const auto count = static_cast<size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
    t.thetas.resize(count);
    t.coef.resize(count);
    t.bconj.resize(count * static_cast<size_t>(t.n_r));
    for (size_t i = 0; i < count; ++i) {
        const double th = lo + step * static_cast<double>(i);
        t.thetas[i] = th;
        t.coef[i] = template_coef(scene, th);
        const auto b = arraykit::steering_vector(th, t.n_r);
        for (int n = 0; n < t.n_r; ++n)
            t.bconj[i * static_cast<size_t>(t.n_r) + static_cast<size_t>(n)] =
                std::conj(b.elements[static_cast<size_t>(n)]);
    }
    return t;
}

// Objective core J(theta) = |c|^2 - 2 Re{conj(c) b^H y}; the echo norm is a
// theta-independent constant added back by callers that report objectives.
size_t argmin_on_table(const SearchTable& t, const std::vector<cplx>& y, double* out_min) {
    size_t best = 0;
    double best_val = 0.0;
    for (size_t i = 0; i < t.thetas.size(); ++i) {
        cplx proj(0.0, 0.0);
        const cplx* row = &t.bconj[i * static_cast<size_t>(t.n_r)];
        for (int n = 0; n < t.n_r; ++n)
            proj += row[static_cast<size_t>(n)] * y[static_cast<size_t>(n)];
        const double j = std::norm(t.coef[i]) - 2.0 * std::real(std::conj(t.coef[i]) * proj);
        if (i == 0 || j < best_val) {
            best = i;
            best_val = j;
        }
    }
    if (out_min != nullptr)
        *out_min = best_val;
    return best;
}

double echo_norm2(const std::vector<cplx>& y) {
    double acc = 0.0;
    for (const auto& e : y)
        acc += std::norm(e);
    return acc;
}

MleEstimate estimate_with_table(const SearchTable& coarse, const Scene& scene,
                                const AngleGrid& grid, const std::vector<cplx>& y) {
    double coarse_min = 0.0;
    const size_t ci = argmin_on_table(coarse, y, &coarse_min);
    const double center = coarse.thetas[ci];
    const double lo = std::max(grid.lo_deg, center - grid.step_deg);
    const double hi = std::min(grid.hi_deg, center + grid.step_deg);
    const SearchTable fine = build_table(scene, lo, hi, grid.refine_step_deg);
    double fine_min = 0.0;
    const size_t fi = argmin_on_table(fine, y, &fine_min);
    MleEstimate e;
    e.theta_deg = fine.thetas[fi];
    e.objective = fine_min + echo_norm2(y);
    return e;
}

} // namespace

CompensatedEcho compensated_echo(const Scene& scene, const SpoofSchedule* schedule,
                                 double compensation_hz, Rng* rng) {
    CompensatedEcho echo;
    echo.compensation_hz = compensation_hz;
    echo.entries = deterministic_echo(scene, schedule, compensation_hz);
    if (rng != nullptr) {
        add_noise(echo.entries, scene, *rng);
        echo.noisy = true;
    }
    return echo;
}

MleEstimate mle_aod(const CompensatedEcho& echo, const Scene& scene, const AngleGrid& grid) {
    if (static_cast<int>(echo.entries.size()) != scene.rsu.n_r)
        throw std::invalid_argument("mle_aod: echo length does not match the receive array");
    const SearchTable coarse = build_table(scene, grid.lo_deg, grid.hi_deg, grid.step_deg);
    return estimate_with_table(coarse, scene, grid, echo.entries);
}

DecompositionReport mle_decomposition_check(const Scene& scene, const SpoofSchedule& schedule,
                                            const AngleGrid& grid, std::uint64_t seed) {
    const double dmu = effective_frequency(schedule.mu_tilde_hz, schedule.interval_s);
    Rng rng(seed);
    std::vector<cplx> noise(static_cast<size_t>(scene.rsu.n_r), cplx(0.0, 0.0));
    add_noise(noise, scene, rng);

    std::vector<cplx> spoofed = deterministic_echo(scene, &schedule, dmu);
    std::vector<cplx> perfect = deterministic_echo(scene, nullptr, scene.mu_v_hz);
    std::vector<cplx> delta(spoofed.size());
    for (size_t n = 0; n < spoofed.size(); ++n) {
        spoofed[n] += noise[n];
        perfect[n] += noise[n];
        delta[n] = spoofed[n] - perfect[n]; // noise cancels; pure spoof displacement
    }

    const SearchTable table = build_table(scene, grid.lo_deg, grid.hi_deg, grid.step_deg);
    const size_t count = table.thetas.size();
    std::vector<double> diff(count);
    size_t best_direct = 0, best_dec = 0;
    double val_direct = 0.0, val_dec = 0.0;
    for (size_t i = 0; i < count; ++i) {
        const cplx* row = &table.bconj[i * static_cast<size_t>(table.n_r)];
        double direct = 0.0, perfect_term = 0.0;
        cplx cross(0.0, 0.0);
        for (int n = 0; n < table.n_r; ++n) {
            const cplx m = table.coef[i] * std::conj(row[static_cast<size_t>(n)]);
            direct += std::norm(spoofed[static_cast<size_t>(n)] - m);
            perfect_term += std::norm(perfect[static_cast<size_t>(n)] - m);
            cross += std::conj(delta[static_cast<size_t>(n)]) *
                     (perfect[static_cast<size_t>(n)] - m);
        }
        const double decomposed = perfect_term + 2.0 * std::real(cross);
        diff[i] = direct - decomposed;
        if (i == 0 || direct < val_direct) {
            best_direct = i;
            val_direct = direct;
        }
        if (i == 0 || decomposed < val_dec) {
            best_dec = i;
            val_dec = decomposed;
        }
    }

    double mean = 0.0;
    for (double d : diff)
        mean += d;
    mean /= static_cast<double>(count);
    double max_dev = 0.0;
    for (double d : diff)
        max_dev = std::max(max_dev, std::abs(d - mean));

    DecompositionReport rep;
    rep.max_rel_deviation = (mean != 0.0) ? max_dev / std::abs(mean) : max_dev;
    rep.argmin_direct_deg = table.thetas[best_direct];
    rep.argmin_decomposed_deg = table.thetas[best_dec];
    rep.same_argmin = best_direct == best_dec;
    return rep;
}

namespace {

template <bool Parallel>
MleResult monte_carlo_impl(const Scene& scene, const SpoofSchedule& schedule, int trials,
                           std::uint64_t seed, const AngleGrid& grid,
                           std::optional<double> compensation_hz) {
    if (trials < 1)
        throw std::invalid_argument("monte_carlo_mle: need at least one trial");
    const double comp =
        compensation_hz.value_or(effective_frequency(schedule.mu_tilde_hz, schedule.interval_s));

    const std::vector<cplx> det_spoofed = deterministic_echo(scene, &schedule, comp);
    const std::vector<cplx> det_perfect = deterministic_echo(scene, nullptr, scene.mu_v_hz);
    const SearchTable coarse = build_table(scene, grid.lo_deg, grid.hi_deg, grid.step_deg);

    MleResult r;
    r.spoofed_deg.resize(static_cast<size_t>(trials));
    r.perfect_deg.resize(static_cast<size_t>(trials));
    r.objective_min.resize(static_cast<size_t>(trials));

#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (Parallel)
#endif
    for (int t = 0; t < trials; ++t) {
        Rng rng = Rng::for_stream(seed, static_cast<std::uint64_t>(t));
        std::vector<cplx> noise(static_cast<size_t>(scene.rsu.n_r), cplx(0.0, 0.0));
        add_noise(noise, scene, rng);
        std::vector<cplx> y(det_spoofed.size());
        for (size_t n = 0; n < y.size(); ++n)
            y[n] = det_spoofed[n] + noise[n];
        const MleEstimate spoofed = estimate_with_table(coarse, scene, grid, y);
        for (size_t n = 0; n < y.size(); ++n)
            y[n] = det_perfect[n] + noise[n];
        const MleEstimate perfect = estimate_with_table(coarse, scene, grid, y);
        r.spoofed_deg[static_cast<size_t>(t)] = spoofed.theta_deg;
        r.objective_min[static_cast<size_t>(t)] = spoofed.objective;
        r.perfect_deg[static_cast<size_t>(t)] = perfect.theta_deg;
    }

    auto mean_std = [](const std::vector<double>& v, double& mean, double& sd) {
        mean = 0.0;
        for (double x : v)
            mean += x;
        mean /= static_cast<double>(v.size());
        double acc = 0.0;
        for (double x : v)
            acc += (x - mean) * (x - mean);
        sd = std::sqrt(acc / static_cast<double>(v.size()));
    };
    mean_std(r.spoofed_deg, r.mean_spoofed_deg, r.std_spoofed_deg);
    mean_std(r.perfect_deg, r.mean_perfect_deg, r.std_perfect_deg);
    return r;
}

} // namespace

MleResult monte_carlo_mle(const Scene& scene, const SpoofSchedule& schedule, int trials,
                          std::uint64_t seed, const AngleGrid& grid,
                          std::optional<double> compensation_hz) {
    return monte_carlo_impl<true>(scene, schedule, trials, seed, grid, compensation_hz);
}

MleResult monte_carlo_mle_serial(const Scene& scene, const SpoofSchedule& schedule, int trials,
                                 std::uint64_t seed, const AngleGrid& grid,
                                 std::optional<double> compensation_hz) {
    return monte_carlo_impl<false>(scene, schedule, trials, seed, grid, compensation_hz);
}

} // namespace spoofsim
