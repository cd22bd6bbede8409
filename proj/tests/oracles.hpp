#ifndef SPOOFSIM_TEST_ORACLES_HPP
#define SPOOFSIM_TEST_ORACLES_HPP

// Test-side reference computations, kept independent of the library's
// closed-form algebra on purpose.

#include "spoofsim/constants.hpp"
#include "spoofsim/rng.hpp"
#include "spoofsim/scenario.hpp"

#include <cmath>
#include <complex>
#include <vector>

namespace testkit {

using cplx = std::complex<double>;

// Geometric-series oracle: |sum_{k=1..K} exp(-i 2 k x)| / K equals
// |sin(Kx)/(K sin x)|.
inline double dirichlet_magnitude_oracle(int order, double x) {
    cplx acc(0.0, 0.0);
    for (int k = 1; k <= order; ++k)
        acc += std::exp(cplx(0.0, -2.0 * k * x));
    return std::abs(acc) / order;
}

// Explicit steering inner product a^H(theta1) a(theta2) for half-wavelength
// spacing, summed element by element.
inline cplx steering_inner_oracle(double theta1_deg, double theta2_deg, int size) {
    const double c1 = std::cos(spoofsim::deg2rad(theta1_deg));
    const double c2 = std::cos(spoofsim::deg2rad(theta2_deg));
    cplx acc(0.0, 0.0);
    for (int k = 0; k < size; ++k)
        acc += std::exp(cplx(0.0, spoofsim::kPi * k * c1)) *
               std::exp(cplx(0.0, -spoofsim::kPi * k * c2)) / static_cast<double>(size);
    return acc;
}

// Randomized alignment-feasible scene used by the property suites.
inline spoofsim::Scene random_scene(spoofsim::Rng& rng, bool threshold_strong = false) {
    auto pick = [&](double lo, double hi) { return lo + (hi - lo) * rng.uniform(); };
    const int sizes[] = {8, 16, 32};

    for (;;) {
        spoofsim::RsuConfig rsu;
        rsu.n_t = sizes[static_cast<size_t>(rng.next() % 3)];
        rsu.n_r = sizes[static_cast<size_t>(rng.next() % 3)];
        rsu.power_w = 1.0;
        rsu.noise_w = 1e-16;
        rsu.carrier_hz = pick(24e9, 30e9);
        rsu.beam_deg = pick(30.0, 150.0);
        rsu.epoch_s = 0.010;

        const double d_r = pick(15.0, 60.0);
        const double d_v = d_r + pick(2.0, 60.0);
        const double th_v = pick(30.0, 150.0);
        const double th_r = pick(30.0, 150.0);

        spoofsim::VehicleTarget vu;
        vu.x_m = d_v * std::cos(spoofsim::deg2rad(th_v));
        vu.y_m = d_v * std::sin(spoofsim::deg2rad(th_v));
        vu.speed_mps = (rng.uniform() < 0.5 ? -1.0 : 1.0) * pick(2.0, 20.0);
        vu.rcs_m2 = pick(1.0, 10.0);

        spoofsim::RisConfig ris;
        ris.x_m = d_r * std::cos(spoofsim::deg2rad(th_r));
        ris.y_m = d_r * std::sin(spoofsim::deg2rad(th_r));
        ris.elements = 1 + static_cast<int>(rng.next() % 64);
        ris.efficiency = pick(0.3, 1.0);
        ris.area_m2 = pick(0.01, 0.1);
        ris.interval_s = 0.001;
        ris.max_delay_s = 1e-6;

        spoofsim::Scene scene = spoofsim::build_scene(rsu, vu, ris);
        if (!spoofsim::delay_alignment_feasible(scene))
            continue;
        if (threshold_strong) {
            const double thr = spoofsim::element_count_threshold(scene);
            if (!(thr > 0.0) || !std::isfinite(thr) || 10.0 * thr > 1024.0)
                continue;
            ris.elements = std::max(1, static_cast<int>(std::ceil(10.0 * thr)));
            scene = spoofsim::build_scene(rsu, vu, ris);
        }
        return scene;
    }
}

} // namespace testkit

#endif
