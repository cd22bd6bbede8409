#include "spoofsim/arraykit.hpp"
#include "spoofsim/constants.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <complex>

using namespace spoofsim;
using arraykit::cplx;

TEST_CASE("steering vector: broadside gives constant entries") {
    const auto sv = arraykit::steering_vector(90.0, 4);
    REQUIRE(sv.size == 4);
    for (const auto& e : sv.elements) {
        CHECK(e.real() == doctest::Approx(0.5).epsilon(1e-15));
        CHECK(e.imag() == doctest::Approx(0.0).epsilon(1e-15));
    }
}

TEST_CASE("steering vector: 135 degrees, two elements") {
    const auto sv = arraykit::steering_vector(135.0, 2);
    const double want_phase = kPi * std::sqrt(2.0) / 2.0; // -pi*cos(135)
    CHECK(std::abs(sv.elements[0] - cplx(1.0 / std::sqrt(2.0), 0.0)) < 1e-15);
    CHECK(std::arg(sv.elements[1]) == doctest::Approx(want_phase).epsilon(1e-12));
    CHECK(std::abs(sv.elements[1]) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-13));
}

TEST_CASE("steering vector: entries match an independent per-element loop") {
    const auto sv = arraykit::steering_vector(60.0, 32);
    for (int k = 0; k < 32; ++k) {
        const cplx want = std::exp(cplx(0.0, -kPi * k * std::cos(deg2rad(60.0)))) /
                          std::sqrt(32.0);
        CHECK(std::abs(sv.elements[static_cast<size_t>(k)] - want) < 1e-14);
    }
    // entry 32 phase: -pi*31*0.5 = -15.5 pi == pi/2 (mod 2 pi)
    CHECK(std::arg(sv.elements[31]) == doctest::Approx(kPi / 2.0).epsilon(1e-12));
}

TEST_CASE("steering vector rejects degenerate input") {
    CHECK_THROWS_AS((void)arraykit::steering_vector(90.0, 0), std::invalid_argument);
    CHECK_THROWS_AS((void)arraykit::steering_vector(0.0, 4), std::invalid_argument);
    CHECK_THROWS_AS((void)arraykit::steering_vector(180.0, 4), std::invalid_argument);
}

TEST_CASE("steering vectors are unit norm") {
    Rng rng(11);
    for (int i = 0; i < 50; ++i) {
        const double th = 1.0 + 178.0 * rng.uniform();
        const int size = 1 + static_cast<int>(rng.next() % 64);
        const auto sv = arraykit::steering_vector(th, size);
        double acc = 0.0;
        for (const auto& e : sv.elements)
            acc += std::norm(e);
        CHECK(acc == doctest::Approx(1.0).epsilon(1e-13));
    }
}

TEST_CASE("dirichlet kernel: limits and zeros") {
    CHECK(arraykit::dirichlet_f(10, 0.0) == doctest::Approx(1.0));
    CHECK(arraykit::dirichlet_f(10, kPi / 10.0) == doctest::Approx(0.0).epsilon(1e-14));
    // period-pi sign flip: f(K, x+pi) = (-1)^{K-1} f(K, x)
    for (double x = -2.9; x < 3.0; x += 0.37) {
        CHECK(arraykit::dirichlet_f(7, x + kPi) ==
              doctest::Approx(arraykit::dirichlet_f(7, x)).epsilon(1e-10));
        CHECK(arraykit::dirichlet_f(8, x + kPi) ==
              doctest::Approx(-arraykit::dirichlet_f(8, x)).epsilon(1e-10));
        CHECK(arraykit::dirichlet_f(8, -x) ==
              doctest::Approx(arraykit::dirichlet_f(8, x)).epsilon(1e-10));
        CHECK(std::abs(arraykit::dirichlet_f(16, x)) <= 1.0 + 1e-12);
    }
}

TEST_CASE("dirichlet kernel matches the geometric-series oracle") {
    CHECK(std::abs(arraykit::dirichlet_f(32, 0.01)) ==
          doctest::Approx(testkit::dirichlet_magnitude_oracle(32, 0.01)).epsilon(1e-12));
    Rng rng(5);
    for (int i = 0; i < 200; ++i) {
        const int order = 1 + static_cast<int>(rng.next() % 64);
        const double x = -4.0 + 8.0 * rng.uniform();
        CHECK(std::abs(arraykit::dirichlet_f(order, x)) ==
              doctest::Approx(testkit::dirichlet_magnitude_oracle(order, x)).epsilon(1e-10));
    }
}

TEST_CASE("removable singularities are continuous") {
    CHECK(std::abs(arraykit::dirichlet_f(32, 1e-9) - 1.0) < 1e-8);
    CHECK(std::abs(arraykit::dirichlet_f(32, -1e-9) - 1.0) < 1e-8);
    CHECK(std::abs(arraykit::dirichlet_f(5, kPi + 1e-9) - 1.0) < 1e-8);  // (-1)^{n(K-1)}, K odd
    CHECK(std::abs(arraykit::dirichlet_f(6, kPi + 1e-9) + 1.0) < 1e-8);  // K even
    CHECK(std::abs(arraykit::sinc(1e-9) - 1.0) < 1e-12);
    CHECK(std::abs(arraykit::sinc(-1e-9) - 1.0) < 1e-12);
}

TEST_CASE("sinc values") {
    CHECK(arraykit::sinc(0.0) == 1.0);
    CHECK(arraykit::sinc(1.0) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(arraykit::sinc(2.0) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(arraykit::sinc(0.5) == doctest::Approx(2.0 / kPi).epsilon(1e-14));
}

TEST_CASE("steering inner product equals the Dirichlet closed form") {
    Rng rng(17);
    for (int i = 0; i < 60; ++i) {
        const double t1 = 5.0 + 170.0 * rng.uniform();
        const double t2 = 5.0 + 170.0 * rng.uniform();
        const int n = 1 + static_cast<int>(rng.next() % 48);
        const auto a1 = arraykit::steering_vector(t1, n);
        const auto a2 = arraykit::steering_vector(t2, n);
        cplx ip(0.0, 0.0);
        for (int k = 0; k < n; ++k)
            ip += std::conj(a1.elements[static_cast<size_t>(k)]) *
                  a2.elements[static_cast<size_t>(k)];
        const double x = (kPi / 2.0) *
                         (std::cos(deg2rad(t1)) - std::cos(deg2rad(t2)));
        CHECK(std::abs(ip) ==
              doctest::Approx(std::abs(arraykit::dirichlet_f(n, x))).epsilon(1e-12));
    }
}

TEST_CASE("g factor: equal angles collapse to unity at the first antenna") {
    CHECK(std::abs(arraykit::g_factor(1, 135.0, 135.0, 32) - cplx(1.0, 0.0)) < 1e-14);
}

TEST_CASE("g factor magnitude is antenna independent and matches the oracle") {
    const double mag1 = std::abs(arraykit::g_factor(1, 90.0, 135.0, 32));
    const double mag32 = std::abs(arraykit::g_factor(32, 90.0, 135.0, 32));
    CHECK(mag1 == doctest::Approx(mag32).epsilon(1e-14));
    const double x = (kPi / 2.0) * (std::cos(deg2rad(90.0)) - std::cos(deg2rad(135.0)));
    CHECK(mag1 == doctest::Approx(testkit::dirichlet_magnitude_oracle(32, x)).epsilon(1e-12));
    CHECK_THROWS_AS((void)arraykit::g_factor(0, 90.0, 135.0, 32), std::out_of_range);
}

TEST_CASE("g factor factorizes through the receive steering vector") {
    // g_n(t1, t2) == sqrt(N_r) * b_n(t2) * h(t1, t2)
    Rng rng(23);
    for (int i = 0; i < 40; ++i) {
        const double t1 = 10.0 + 160.0 * rng.uniform();
        const double t2 = 10.0 + 160.0 * rng.uniform();
        const int n_r = 4 + static_cast<int>(rng.next() % 32);
        const int n = 1 + static_cast<int>(rng.next() % n_r);
        const auto b = arraykit::steering_vector(t2, n_r);
        const cplx want = std::sqrt(static_cast<double>(n_r)) *
                          b.elements[static_cast<size_t>(n - 1)] *
                          arraykit::h_factor(t1, t2, n_r);
        CHECK(std::abs(arraykit::g_factor(n, t1, t2, n_r) - want) < 1e-12);
    }
}

TEST_CASE("h factor: identities") {
    CHECK(std::abs(arraykit::h_factor(135.0, 135.0, 32) - cplx(1.0, 0.0)) < 1e-14);
    const cplx h12 = arraykit::h_factor(90.0, 135.0, 32);
    const cplx h21 = arraykit::h_factor(135.0, 90.0, 32);
    CHECK(std::abs(h12 - std::conj(h21)) < 1e-14);
    const double x = (kPi / 2.0) * (std::sqrt(2.0) / 2.0);
    CHECK(std::abs(h12) ==
          doctest::Approx(testkit::dirichlet_magnitude_oracle(32, x)).epsilon(1e-12));
}

TEST_CASE("h factor equals the explicit steering inner product a^H(t2) a(t1)") {
    Rng rng(29);
    for (int i = 0; i < 40; ++i) {
        const double t1 = 10.0 + 160.0 * rng.uniform();
        const double t2 = 10.0 + 160.0 * rng.uniform();
        const int n = 2 + static_cast<int>(rng.next() % 48);
        const cplx want = testkit::steering_inner_oracle(t2, t1, n);
        CHECK(std::abs(arraykit::h_factor(t1, t2, n) - want) < 1e-12);
    }
}
