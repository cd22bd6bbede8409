#include "spoofsim/arraykit.hpp"
#include "spoofsim/constants.hpp"

#include <cmath>
#include <stdexcept>

namespace spoofsim {
namespace arraykit {

SteeringVector steering_vector(double theta_deg, int size) {
    if (size < 1)
        throw std::invalid_argument("steering_vector: antenna count must be >= 1");
    if (!(theta_deg > 0.0 && theta_deg < 180.0))
        throw std::invalid_argument("steering_vector: angle must lie strictly in (0, 180) degrees");

    const double c = std::cos(deg2rad(theta_deg));
    const double norm = 1.0 / std::sqrt(static_cast<double>(size));
    SteeringVector sv;
    sv.size = size;
    sv.elements.resize(static_cast<size_t>(size));
    for (int k = 0; k < size; ++k)
        sv.elements[static_cast<size_t>(k)] = std::polar(norm, -kPi * k * c);
    return sv;
}

double dirichlet_f(int order, double x) {
    if (order < 1)
        throw std::invalid_argument("dirichlet_f: order must be >= 1");
    const double s = std::sin(x);
    if (std::abs(s) < 1e-9) {
        // x ~ n*pi; limit is (-1)^{n(K-1)}
        const long long n = std::llround(x / kPi);
        return ((n * (order - 1)) % 2 == 0) ? 1.0 : -1.0;
    }
    return std::sin(order * x) / (order * s);
}

double sinc(double x) {
    if (std::abs(x) < 1e-9)
        return 1.0;
    return std::sin(kPi * x) / (kPi * x);
}

cplx g_factor(int n_r, double theta1_deg, double theta2_deg, int n_t) {
    if (n_r < 1)
        throw std::out_of_range("g_factor: receive antenna index is 1-based");
    const double c1 = std::cos(deg2rad(theta1_deg));
    const double c2 = std::cos(deg2rad(theta2_deg));
    const double phase = -(kPi / 2.0) * (c1 * (n_t - 1) - c2 * (n_t + 1 - 2 * n_r));
    return std::polar(1.0, phase) * dirichlet_f(n_t, (kPi / 2.0) * (c1 - c2));
}

cplx h_factor(double theta1_deg, double theta2_deg, int n_t) {
    const double c1 = std::cos(deg2rad(theta1_deg));
    const double c2 = std::cos(deg2rad(theta2_deg));
    const double phase = -(kPi * (n_t - 1) / 2.0) * (c1 - c2);
    return std::polar(1.0, phase) * dirichlet_f(n_t, (kPi / 2.0) * (c1 - c2));
}

} // namespace arraykit
} // namespace spoofsim
