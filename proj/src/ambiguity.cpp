#include "spoofsim/ambiguity.hpp"
#include "spoofsim/arraykit.hpp"
#include "spoofsim/constants.hpp"
#include "spoofsim/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace spoofsim {

using arraykit::cplx;

const char* method_name(AmbiguitySurface::Method m) {
    switch (m) {
    case AmbiguitySurface::Method::oracle: return "oracle";
    case AmbiguitySurface::Method::closed_form: return "closed_form";
    case AmbiguitySurface::Method::approximation: return "approximation";
    }
    return "unknown";
}

namespace {

void check_alignment(const Scene& scene) {
    if (!delay_alignment_feasible(scene))
        throw std::invalid_argument("ambiguity: delay alignment infeasible for this geometry");
}

void finalize_peak(AmbiguitySurface& s) {
    size_t best = 0;
    for (size_t i = 1; i < s.values.size(); ++i)
        if (s.values[i] > s.values[best])
            best = i; // strict: ties keep the lowest frequency
    s.peak_mu_hz = s.mu_grid_hz.empty() ? 0.0 : s.mu_grid_hz[best];
}

// Exact integral of exp(j 2 pi xi t) over [t0, t1].
cplx tone_integral(double xi, double t0, double t1) {
    const double len = t1 - t0;
    return len * arraykit::sinc(xi * len) * std::polar(1.0, kPi * xi * (t0 + t1));
}

// Explicit inner product a^H(theta1) a(theta2) by element summation; the
// oracle must not share the Dirichlet closed form with the other paths.
cplx steering_inner(double theta1_deg, double theta2_deg, int size) {
    const auto a1 = arraykit::steering_vector(theta1_deg, size);
    const auto a2 = arraykit::steering_vector(theta2_deg, size);
    cplx acc(0.0, 0.0);
    for (int k = 0; k < size; ++k)
        acc += std::conj(a1.elements[static_cast<size_t>(k)]) * a2.elements[static_cast<size_t>(k)];
    return acc;
}

struct EchoTerms {
    std::vector<cplx> vu;  // per-receive-antenna vehicle coefficient
    std::vector<cplx> ris; // per-receive-antenna RIS coefficient (aperture total)
};

EchoTerms per_antenna_terms(const Scene& scene) {
    const int nr = scene.rsu.n_r;
    const double amp = std::sqrt(scene.rsu.power_w) * scene.gamma_b;
    const auto b_v = arraykit::steering_vector(scene.theta_v_deg, nr);
    const auto b_r = arraykit::steering_vector(scene.theta_r_deg, nr);
    const cplx w_v = steering_inner(scene.theta_v_deg, scene.rsu.beam_deg, scene.rsu.n_t);
    const cplx w_r = steering_inner(scene.theta_r_deg, scene.rsu.beam_deg, scene.rsu.n_t);
    EchoTerms t;
    t.vu.resize(static_cast<size_t>(nr));
    t.ris.resize(static_cast<size_t>(nr));
    for (int n = 0; n < nr; ++n) {
        t.vu[static_cast<size_t>(n)] = amp * scene.beta_v * b_v.elements[static_cast<size_t>(n)] * w_v;
        t.ris[static_cast<size_t>(n)] = amp * scene.beta_r * b_r.elements[static_cast<size_t>(n)] * w_r;
    }
    return t;
}

// Matched-filtered receiver noise on a Fourier basis of the epoch: the
// filter output at probe mu is the band-limited interpolation of i.i.d.
// CN(0, sigma^2 T) samples spaced 1/T apart, which keeps the correlation
// across nearby grid frequencies.
struct FilteredNoise {
    std::vector<cplx> coeff; // antenna-major blocks of harmonics
    int k_lo = 0;
    int k_hi = -1;
    int n_r = 0;

    cplx at(int antenna, double mu, double epoch) const {
        cplx acc(0.0, 0.0);
        const size_t base = static_cast<size_t>(antenna) *
                            static_cast<size_t>(k_hi - k_lo + 1);
        for (int k = k_lo; k <= k_hi; ++k) {
            const double off = epoch * (mu - k / epoch);
            acc += coeff[base + static_cast<size_t>(k - k_lo)] * arraykit::sinc(off) *
                   std::polar(1.0, -kPi * off);
        }
        return acc * std::sqrt(epoch);
    }
};

FilteredNoise draw_filtered_noise(const Scene& scene, const std::vector<double>& grid,
                                  Rng& rng) {
    FilteredNoise fn;
    double lo = grid.front(), hi = grid.front();
    for (double mu : grid) {
        lo = std::min(lo, mu);
        hi = std::max(hi, mu);
    }
    fn.k_lo = static_cast<int>(std::floor(lo * scene.rsu.epoch_s)) - 5;
    fn.k_hi = static_cast<int>(std::ceil(hi * scene.rsu.epoch_s)) + 5;
    fn.n_r = scene.rsu.n_r;
    const double s = std::sqrt(scene.rsu.noise_w / 2.0);
    fn.coeff.resize(static_cast<size_t>(fn.n_r) *
                    static_cast<size_t>(fn.k_hi - fn.k_lo + 1));
    for (auto& c : fn.coeff)
        c = cplx(s * rng.normal(), s * rng.normal());
    return fn;
}

template <bool Parallel>
AmbiguitySurface oracle_impl(const Scene& scene, const SpoofSchedule& schedule,
                             const std::vector<double>& mu_grid_hz, int time_steps,
                             Rng* noise_rng) {
    check_alignment(scene);
    const int k_intervals = scene.intervals_per_epoch;
    if (time_steps < 100 * k_intervals)
        throw std::invalid_argument("surface_oracle: need at least 100 K time steps");
    if (mu_grid_hz.empty())
        throw std::invalid_argument("surface_oracle: empty grid");

    const double epoch = scene.rsu.epoch_s;
    const double dt = scene.ris.interval_s;
    const int m_elems = schedule.elements;
    const EchoTerms terms = per_antenna_terms(scene);

    FilteredNoise noise;
    if (noise_rng != nullptr)
        noise = draw_filtered_noise(scene, mu_grid_hz, *noise_rng);

    // Per-interval RIS reflection scalar: the element sum contracted with the
    // normalized RIS-side steering vectors reduces to (1/M) sum_m e^{j phi_m}.
    std::vector<cplx> rho(static_cast<size_t>(k_intervals), cplx(0.0, 0.0));
    if (m_elems > 0) {
        for (int k = 0; k < k_intervals; ++k) {
            const double t_mid = (k + 0.5) * dt;
            cplx acc(0.0, 0.0);
            for (int m = 1; m <= m_elems; ++m)
                acc += std::polar(1.0, phase_shift(schedule, m, t_mid));
            rho[static_cast<size_t>(k)] = acc / static_cast<double>(m_elems);
        }
    }

    AmbiguitySurface s;
    s.method = AmbiguitySurface::Method::oracle;
    s.mu_grid_hz = mu_grid_hz;
    s.values.assign(mu_grid_hz.size(), 0.0);

    const auto count = static_cast<long>(mu_grid_hz.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (Parallel)
#endif
    for (long i = 0; i < count; ++i) {
        const double mu = mu_grid_hz[static_cast<size_t>(i)];
        const cplx i_vu = tone_integral(scene.mu_v_hz - mu, 0.0, epoch);
        cplx i_ris(0.0, 0.0);
        for (int k = 0; k < k_intervals; ++k)
            i_ris += rho[static_cast<size_t>(k)] * tone_integral(-mu, k * dt, (k + 1) * dt);
        double acc = 0.0;
        for (int n = 0; n < scene.rsu.n_r; ++n) {
            cplx e = terms.vu[static_cast<size_t>(n)] * i_vu +
                     terms.ris[static_cast<size_t>(n)] * i_ris;
            if (noise_rng != nullptr)
                e += noise.at(n, mu, epoch);
            acc += std::norm(e);
        }
        s.values[static_cast<size_t>(i)] = acc;
    }
    finalize_peak(s);
    return s;
}

} // namespace

AmbiguitySurface surface_oracle(const Scene& scene, const SpoofSchedule& schedule,
                                const std::vector<double>& mu_grid_hz, int time_steps,
                                Rng* noise_rng) {
    return oracle_impl<true>(scene, schedule, mu_grid_hz, time_steps, noise_rng);
}

AmbiguitySurface surface_oracle_serial(const Scene& scene, const SpoofSchedule& schedule,
                                       const std::vector<double>& mu_grid_hz, int time_steps,
                                       Rng* noise_rng) {
    return oracle_impl<false>(scene, schedule, mu_grid_hz, time_steps, noise_rng);
}

AmbiguitySurface surface_oracle_trapezoid(const Scene& scene, const SpoofSchedule& schedule,
                                          const std::vector<double>& mu_grid_hz, int time_steps) {
    check_alignment(scene);
    if (time_steps < 100 * scene.intervals_per_epoch)
        throw std::invalid_argument("surface_oracle_trapezoid: need at least 100 K time steps");
    const double epoch = scene.rsu.epoch_s;
    const double h = epoch / time_steps;
    const int m_elems = schedule.elements;
    const EchoTerms terms = per_antenna_terms(scene);

    // Sampled time factors, grid-independent.
    std::vector<cplx> vu_tone(static_cast<size_t>(time_steps) + 1);
    std::vector<cplx> ris_tone(static_cast<size_t>(time_steps) + 1, cplx(0.0, 0.0));
    for (int i = 0; i <= time_steps; ++i) {
        const double t = i * h;
        vu_tone[static_cast<size_t>(i)] = std::polar(1.0, kTwoPi * scene.mu_v_hz * t);
        if (m_elems > 0) {
            cplx acc(0.0, 0.0);
            for (int m = 1; m <= m_elems; ++m)
                acc += std::polar(1.0, phase_shift(schedule, m, t));
            ris_tone[static_cast<size_t>(i)] = acc / static_cast<double>(m_elems);
        }
    }

    AmbiguitySurface s;
    s.method = AmbiguitySurface::Method::oracle;
    s.mu_grid_hz = mu_grid_hz;
    s.values.assign(mu_grid_hz.size(), 0.0);
    for (size_t gi = 0; gi < mu_grid_hz.size(); ++gi) {
        const double mu = mu_grid_hz[gi];
        cplx i_vu(0.0, 0.0), i_ris(0.0, 0.0);
        for (int i = 0; i <= time_steps; ++i) {
            const double w = (i == 0 || i == time_steps) ? 0.5 : 1.0;
            const cplx down = std::polar(w * h, -kTwoPi * mu * (i * h));
            i_vu += vu_tone[static_cast<size_t>(i)] * down;
            i_ris += ris_tone[static_cast<size_t>(i)] * down;
        }
        double acc = 0.0;
        for (int n = 0; n < scene.rsu.n_r; ++n)
            acc += std::norm(terms.vu[static_cast<size_t>(n)] * i_vu +
                             terms.ris[static_cast<size_t>(n)] * i_ris);
        s.values[gi] = acc;
    }
    finalize_peak(s);
    return s;
}

namespace {

template <bool Parallel>
AmbiguitySurface closed_form_impl(const Scene& scene, const SpoofSchedule& schedule,
                                  const std::vector<double>& mu_grid_hz) {
    if (mu_grid_hz.empty())
        throw std::invalid_argument("surface_closed_form: empty grid");
    const double epoch = scene.rsu.epoch_s;
    const double dt = scene.ris.interval_s;
    const int k_intervals = scene.intervals_per_epoch;
    const double mu_t = schedule.mu_tilde_hz;
    const double scale = scene.rsu.power_w * epoch * epoch * scene.gamma_b * scene.gamma_b /
                         scene.rsu.n_r;
    const bool has_ris = schedule.elements > 0 && std::abs(scene.beta_r) > 0.0;

    AmbiguitySurface s;
    s.method = AmbiguitySurface::Method::closed_form;
    s.mu_grid_hz = mu_grid_hz;
    s.values.assign(mu_grid_hz.size(), 0.0);

    // The per-antenna factors do not depend on the probe frequency.
    std::vector<cplx> g_v(static_cast<size_t>(scene.rsu.n_r));
    std::vector<cplx> g_r(static_cast<size_t>(scene.rsu.n_r));
    for (int n = 1; n <= scene.rsu.n_r; ++n) {
        g_v[static_cast<size_t>(n - 1)] =
            arraykit::g_factor(n, scene.rsu.beam_deg, scene.theta_v_deg, scene.rsu.n_t);
        g_r[static_cast<size_t>(n - 1)] =
            arraykit::g_factor(n, scene.rsu.beam_deg, scene.theta_r_deg, scene.rsu.n_t);
    }

    const auto count = static_cast<long>(mu_grid_hz.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (Parallel)
#endif
    for (long i = 0; i < count; ++i) {
        const double mu = mu_grid_hz[static_cast<size_t>(i)];
        const cplx vu_part = scene.beta_v * arraykit::sinc(epoch * (mu - scene.mu_v_hz)) *
                             std::polar(1.0, -kPi * (mu - scene.mu_v_hz) * epoch);
        cplx ris_part(0.0, 0.0);
        if (has_ris) {
            ris_part = scene.beta_r * arraykit::sinc(mu * dt) *
                       arraykit::dirichlet_f(k_intervals, kPi * dt * (mu - mu_t)) *
                       std::polar(1.0, kPi * mu_t * dt - kPi * (mu - mu_t) * epoch);
        }
        double acc = 0.0;
        for (int n = 0; n < scene.rsu.n_r; ++n)
            acc += std::norm(vu_part * g_v[static_cast<size_t>(n)] +
                             ris_part * g_r[static_cast<size_t>(n)]);
        s.values[static_cast<size_t>(i)] = scale * acc;
    }
    finalize_peak(s);
    return s;
}

} // namespace

AmbiguitySurface surface_closed_form(const Scene& scene, const SpoofSchedule& schedule,
                                     const std::vector<double>& mu_grid_hz) {
    return closed_form_impl<true>(scene, schedule, mu_grid_hz);
}

AmbiguitySurface surface_closed_form_serial(const Scene& scene, const SpoofSchedule& schedule,
                                            const std::vector<double>& mu_grid_hz) {
    return closed_form_impl<false>(scene, schedule, mu_grid_hz);
}

AmbiguitySurface surface_approx(const Scene& scene, double delta_mu_tilde_hz,
                                const std::vector<double>& mu_grid_hz) {
    if (infeasible_set_member(delta_mu_tilde_hz, scene))
        throw std::invalid_argument("surface_approx: spoofing frequency lies in the infeasible set");
    if (mu_grid_hz.empty())
        throw std::invalid_argument("surface_approx: empty grid");
    const double epoch = scene.rsu.epoch_s;
    const double dt = scene.ris.interval_s;
    const int k_intervals = scene.intervals_per_epoch;
    const double scale = scene.rsu.power_w * epoch * epoch * scene.gamma_b * scene.gamma_b;
    const BeamCoefficients bc = beam_coefficients(scene);

    AmbiguitySurface s;
    s.method = AmbiguitySurface::Method::approximation;
    s.mu_grid_hz = mu_grid_hz;
    s.values.assign(mu_grid_hz.size(), 0.0);
    for (size_t i = 0; i < mu_grid_hz.size(); ++i) {
        const double mu = mu_grid_hz[i];
        const double s_v = arraykit::sinc(epoch * (mu - scene.mu_v_hz));
        const double s_r = arraykit::sinc(mu * dt);
        const double f_k = arraykit::dirichlet_f(k_intervals, kPi * dt * (mu - delta_mu_tilde_hz));
        s.values[i] = scale * (bc.c_v * s_v * s_v + bc.c_r * s_r * s_r * f_k * f_k);
    }
    finalize_peak(s);
    return s;
}

double peak(const AmbiguitySurface& surface) {
    if (surface.mu_grid_hz.empty())
        throw std::invalid_argument("peak: empty surface");
    return surface.peak_mu_hz;
}

std::vector<double> uniform_mu_grid(const Scene& scene, double resolution_hz) {
    if (!(resolution_hz > 0.0))
        throw std::invalid_argument("uniform_mu_grid: resolution must be positive");
    const double period = 1.0 / scene.ris.interval_s;
    const auto count = static_cast<long>(std::floor(period / resolution_hz + 1e-9));
    std::vector<double> grid(static_cast<size_t>(count));
    for (long i = 0; i < count; ++i)
        grid[static_cast<size_t>(i)] = resolution_hz * static_cast<double>(i + 1);
    return grid;
}

} // namespace spoofsim
