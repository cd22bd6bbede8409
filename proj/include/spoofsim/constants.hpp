#ifndef SPOOFSIM_CONSTANTS_HPP
#define SPOOFSIM_CONSTANTS_HPP

namespace spoofsim {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

// Fixed speed of light for cross-platform determinism.
inline constexpr double kSpeedOfLight = 299792458.0;

inline constexpr double deg2rad(double deg) { return deg * kPi / 180.0; }
inline constexpr double rad2deg(double rad) { return rad * 180.0 / kPi; }

} // namespace spoofsim

#endif
