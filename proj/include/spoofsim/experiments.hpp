#ifndef SPOOFSIM_EXPERIMENTS_HPP
#define SPOOFSIM_EXPERIMENTS_HPP

#include "spoofsim/config.hpp"

#include <ostream>

namespace spoofsim {

/// fig3 experiment: feasible spoofing velocity versus beam direction.
/// Detail rows per (theta_0, candidate) plus per-theta_0 summary rows.
void run_fig3(const Config& cfg, std::ostream& out);

/// fig4 experiment: spoofing velocity range versus element count, with the
/// per-element aperture held at its configured value (area scales with M).
void run_fig4(const Config& cfg, std::ostream& out);

/// fig5 experiment: Monte Carlo AoD estimates versus spoofing frequency.
/// The Doppler compensation follows the matched-filter peak, so infeasible
/// spoofing frequencies fall back to the true Doppler.
void run_fig5(const Config& cfg, std::ostream& out);

/// Ad-hoc queries.
void query_scene(const Config& cfg, std::ostream& out);
void query_feasible_set(const Config& cfg, std::ostream& out);
void query_surface(const Config& cfg, std::ostream& out);
void query_mle(const Config& cfg, std::ostream& out);

} // namespace spoofsim

#endif
