#ifndef SPOOFSIM_ARRAYKIT_HPP
#define SPOOFSIM_ARRAYKIT_HPP

#include <complex>
#include <vector>

namespace spoofsim {
namespace arraykit {

using cplx = std::complex<double>;

/// Half-wavelength ULA steering vector. Entry k (1-based) equals
/// (1/sqrt(size)) * exp(-i*pi*(k-1)*cos(theta)).
struct SteeringVector {
    std::vector<cplx> elements;
    int size = 0;
};

/// Builds the steering vector for a ULA of `size` antennas pointed by the
/// plane-wave angle `theta_deg` measured from the array axis.
/// Rejects endfire angles (theta must lie strictly inside (0, 180)).
SteeringVector steering_vector(double theta_deg, int size);

/// Normalized Dirichlet kernel f(K, x) = sin(Kx) / (K sin x).
/// The removable singularities at x = n*pi evaluate to the analytic limit
/// (-1)^{n(K-1)}. |f| <= 1 everywhere.
double dirichlet_f(int order, double x);

/// sinc(x) = sin(pi x) / (pi x), with sinc(0) = 1.
double sinc(double x);

/// Per-receive-antenna array response factor
///   g_{n_r}(t1, t2) = exp(-i*pi/2 * [cos(t1)(Nt-1) - cos(t2)(Nt+1-2 n_r)])
///                     * f(Nt, pi/2 (cos t1 - cos t2)).
/// n_r is 1-based. |g| does not depend on n_r.
cplx g_factor(int n_r, double theta1_deg, double theta2_deg, int n_t);

/// Aggregate transmit-side factor
///   h(t1, t2) = exp(-i*pi*(Nt-1)/2 * (cos t1 - cos t2))
///               * f(Nt, pi/2 (cos t1 - cos t2)).
/// Satisfies h(t, t) = 1 and h(t1, t2) = conj(h(t2, t1)).
cplx h_factor(double theta1_deg, double theta2_deg, int n_t);

} // namespace arraykit
} // namespace spoofsim

#endif
