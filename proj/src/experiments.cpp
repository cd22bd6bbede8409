#include "spoofsim/experiments.hpp"
#include "spoofsim/ambiguity.hpp"
#include "spoofsim/csv.hpp"
#include "spoofsim/estimator.hpp"
#include "spoofsim/rng.hpp"

#include <cmath>
#include <optional>

namespace spoofsim {

namespace {

void emit_config(CsvWriter& csv, const Config& cfg, const std::string& what) {
    csv.comment("spoofsim " + what);
    csv.comment("resolved configuration:");
    for (const auto& line : cfg.dump())
        csv.comment("  " + line);
}

void require_alignment(const Scene& scene) {
    if (!delay_alignment_feasible(scene))
        throw InfeasibleSceneError(
            "required adjustable delay 2(d_V - d_R)/c is outside [0, max_delay]; "
            "echo alignment impossible for this geometry");
}

Scene scene_with_beam(const Config& cfg, double beam_deg) {
    Scene base = cfg.scene();
    RsuConfig rsu = base.rsu;
    rsu.beam_deg = beam_deg;
    return build_scene(rsu, base.vu, base.ris);
}

} // namespace

void run_fig3(const Config& cfg, std::ostream& out) {
    const Scene base = cfg.scene();
    require_alignment(base);
    CsvWriter csv(out);
    emit_config(csv, cfg, "fig3: feasible spoofing velocity vs beam steering direction");
    csv.header({"row_type", "theta0_deg", "dmu_hz", "margin", "feasible", "velocity_mps",
                "vmin_mps", "vmax_mps", "dev_min_mps", "dev_max_mps"});

    const double lo = cfg.number("fig3.theta_min_deg");
    const double hi = cfg.number("fig3.theta_max_deg");
    const double step = cfg.number("fig3.theta_step_deg");
    const double res = cfg.grid_hz();
    for (double th = lo; th <= hi + 1e-9; th += step) {
        const Scene scene = scene_with_beam(cfg, th);
        const FeasibleSet fs = feasible_set(scene, res);
        for (size_t i = 0; i < fs.grid_hz.size(); ++i) {
            csv.row({"detail", CsvWriter::num(th), CsvWriter::num(fs.grid_hz[i]),
                     CsvWriter::num(fs.margin[i]), fs.mask[i] ? "1" : "0",
                     CsvWriter::num(velocity_from_doppler(scene, fs.grid_hz[i])), "", "", "", ""});
        }
        const auto range = feasible_velocity_range(fs, scene);
        if (range.has_value()) {
            csv.row({"summary", CsvWriter::num(th), "", "", "1", "",
                     CsvWriter::num(range->first), CsvWriter::num(range->second),
                     CsvWriter::num(range->first - scene.vu.speed_mps),
                     CsvWriter::num(range->second - scene.vu.speed_mps)});
        } else {
            csv.row({"summary", CsvWriter::num(th), "", "", "0", "", "", "", "", ""});
        }
    }
}

void run_fig4(const Config& cfg, std::ostream& out) {
    const Scene base = cfg.scene();
    require_alignment(base);
    CsvWriter csv(out);
    emit_config(csv, cfg, "fig4: spoofing velocity range vs number of reflecting elements");
    csv.comment("element aperture fixed at area_m2/elements of the base configuration");
    csv.header({"theta0_deg", "elements", "area_m2", "vmin_mps", "vmax_mps", "range_mps", "empty"});

    const double elem_area = base.ris.area_m2 / base.ris.elements;
    const auto thetas = cfg.number_list("fig4.theta_list");
    const auto m_values = cfg.number_list("fig4.m_values");
    const double res = cfg.grid_hz();
    for (double th : thetas) {
        for (double m_raw : m_values) {
            const int m = static_cast<int>(std::lround(m_raw));
            RsuConfig rsu = base.rsu;
            rsu.beam_deg = th;
            RisConfig ris = base.ris;
            ris.elements = m;
            ris.area_m2 = elem_area * m;
            const Scene scene = build_scene(rsu, base.vu, ris);
            const FeasibleSet fs = feasible_set(scene, res);
            const auto range = feasible_velocity_range(fs, scene);
            const double width = range ? range->second - range->first : 0.0;
            csv.row({CsvWriter::num(th), CsvWriter::num(m), CsvWriter::num(ris.area_m2),
                     range ? CsvWriter::num(range->first) : "",
                     range ? CsvWriter::num(range->second) : "", CsvWriter::num(width),
                     range ? "0" : "1"});
        }
    }
}

void run_fig5(const Config& cfg, std::ostream& out) {
    const Scene base = cfg.scene();
    require_alignment(base);
    CsvWriter csv(out);
    emit_config(csv, cfg, "fig5: spoofed AoD MLE vs spoofing frequency");
    csv.header({"theta0_deg", "dmu_hz", "mu_hat_hz", "trials", "mean_spoofed_deg",
                "std_spoofed_deg", "mean_perfect_deg", "std_perfect_deg"});

    const auto thetas = cfg.number_list("fig5.theta_list");
    const double dstep = cfg.number("fig5.dmu_step_hz");
    const int trials = cfg.trials();
    const AngleGrid grid = cfg.angle_grid();
    for (double th : thetas) {
        const Scene scene = scene_with_beam(cfg, th);
        const auto mu_grid = uniform_mu_grid(scene, cfg.grid_hz());
        const double period = 1.0 / scene.ris.interval_s;
        for (double dmu = dstep; dmu <= period + 1e-9; dmu += dstep) {
            const SpoofSchedule schedule = make_schedule(scene, dmu);
            const double mu_hat = peak(surface_closed_form(scene, schedule, mu_grid));
            const MleResult r =
                monte_carlo_mle(scene, schedule, trials, cfg.seed(), grid, mu_hat);
            csv.row({CsvWriter::num(th), CsvWriter::num(dmu), CsvWriter::num(mu_hat),
                     CsvWriter::num(trials), CsvWriter::num(r.mean_spoofed_deg),
                     CsvWriter::num(r.std_spoofed_deg), CsvWriter::num(r.mean_perfect_deg),
                     CsvWriter::num(r.std_perfect_deg)});
        }
    }
}

void query_scene(const Config& cfg, std::ostream& out) {
    const Scene s = cfg.scene();
    out << "wavelength_m: " << CsvWriter::num(s.lambda_m) << "\n"
        << "d_v_m: " << CsvWriter::num(s.d_v_m) << "\n"
        << "d_r_m: " << CsvWriter::num(s.d_r_m) << "\n"
        << "theta_v_deg: " << CsvWriter::num(s.theta_v_deg) << "\n"
        << "theta_r_deg: " << CsvWriter::num(s.theta_r_deg) << "\n"
        << "tau_v_s: " << CsvWriter::num(s.tau_v_s) << "\n"
        << "delta_t_r_s: " << CsvWriter::num(s.delta_t_r_s) << "\n"
        << "mu_v_hz: " << CsvWriter::num(s.mu_v_hz) << "\n"
        << "gamma_b: " << CsvWriter::num(s.gamma_b) << "\n"
        << "kappa_r_m2: " << CsvWriter::num(s.kappa_r_m2) << "\n"
        << "beta_v_mag: " << CsvWriter::num(std::abs(s.beta_v)) << "\n"
        << "beta_r_mag: " << CsvWriter::num(std::abs(s.beta_r)) << "\n"
        << "intervals_per_epoch: " << s.intervals_per_epoch << "\n"
        << "element_threshold: " << CsvWriter::num(element_count_threshold(s)) << "\n"
        << "element_count_ok_x10: " << (element_count_sufficient(s) ? "yes" : "no") << "\n"
        << "delay_alignment_feasible: " << (delay_alignment_feasible(s) ? "yes" : "no") << "\n";
}

void query_feasible_set(const Config& cfg, std::ostream& out) {
    const Scene scene = cfg.scene();
    require_alignment(scene);
    CsvWriter csv(out);
    emit_config(csv, cfg, "feasible-set query");
    const FeasibleSet fs = feasible_set(scene, cfg.grid_hz());
    csv.comment("element_threshold=" + CsvWriter::num(fs.element_threshold));
    if (!fs.element_count_ok)
        csv.comment("warning: element count below 10x the dominance threshold; "
                    "margins remain evaluable but the approximation is weak");
    const auto range = feasible_velocity_range(fs, scene);
    if (range.has_value())
        csv.comment("feasible velocities: " + CsvWriter::num(range->first) + " to " +
                    CsvWriter::num(range->second) + " m/s");
    else
        csv.comment("feasible set is empty at this beam direction");
    csv.header({"dmu_hz", "margin", "feasible", "velocity_mps"});
    for (size_t i = 0; i < fs.grid_hz.size(); ++i)
        csv.row({CsvWriter::num(fs.grid_hz[i]), CsvWriter::num(fs.margin[i]),
                 fs.mask[i] ? "1" : "0",
                 CsvWriter::num(velocity_from_doppler(scene, fs.grid_hz[i]))});
}

void query_surface(const Config& cfg, std::ostream& out) {
    const Scene scene = cfg.scene();
    require_alignment(scene);
    CsvWriter csv(out);
    emit_config(csv, cfg, "ambiguity-surface query");
    const double mu_tilde = cfg.number("spoof.frequency_hz");
    const SpoofSchedule schedule = make_schedule(scene, mu_tilde);
    const auto grid = uniform_mu_grid(scene, cfg.grid_hz());
    Rng noise_rng(cfg.seed());
    const bool with_noise = cfg.integer("surface.noise") != 0;
    if (with_noise)
        csv.comment("oracle column includes matched-filtered receiver noise");
    const auto oracle = surface_oracle(scene, schedule, grid, 100 * scene.intervals_per_epoch,
                                       with_noise ? &noise_rng : nullptr);
    const auto closed = surface_closed_form(scene, schedule, grid);
    const double dmu = effective_frequency(mu_tilde, scene.ris.interval_s);
    std::optional<AmbiguitySurface> approx;
    if (!infeasible_set_member(dmu, scene))
        approx = surface_approx(scene, dmu, grid);
    else
        csv.comment("approximation column omitted: spoofing frequency lies in the infeasible set");
    csv.comment("peak_oracle_hz=" + CsvWriter::num(peak(oracle)));
    csv.comment("peak_closed_form_hz=" + CsvWriter::num(peak(closed)));
    csv.header({"mu_hz", "oracle", "closed_form", "approximation"});
    for (size_t i = 0; i < grid.size(); ++i)
        csv.row({CsvWriter::num(grid[i]), CsvWriter::num(oracle.values[i]),
                 CsvWriter::num(closed.values[i]),
                 approx ? CsvWriter::num(approx->values[i]) : ""});
}

void query_mle(const Config& cfg, std::ostream& out) {
    const Scene scene = cfg.scene();
    require_alignment(scene);
    CsvWriter csv(out);
    emit_config(csv, cfg, "mle query");
    const double mu_tilde = cfg.number("spoof.frequency_hz");
    const SpoofSchedule schedule = make_schedule(scene, mu_tilde);
    const double mu_hat =
        peak(surface_closed_form(scene, schedule, uniform_mu_grid(scene, cfg.grid_hz())));
    const MleResult r = monte_carlo_mle(scene, schedule, cfg.trials(), cfg.seed(),
                                        cfg.angle_grid(), mu_hat);
    csv.comment("doppler_estimate_hz=" + CsvWriter::num(mu_hat));
    csv.comment("mean_spoofed_deg=" + CsvWriter::num(r.mean_spoofed_deg) +
                " std_spoofed_deg=" + CsvWriter::num(r.std_spoofed_deg));
    csv.comment("mean_perfect_deg=" + CsvWriter::num(r.mean_perfect_deg) +
                " std_perfect_deg=" + CsvWriter::num(r.std_perfect_deg));
    csv.header({"trial", "estimate_deg", "objective_min", "perfect_deg"});
    for (size_t t = 0; t < r.spoofed_deg.size(); ++t)
        csv.row({CsvWriter::num(static_cast<int>(t)), CsvWriter::num(r.spoofed_deg[t]),
                 CsvWriter::num(r.objective_min[t]), CsvWriter::num(r.perfect_deg[t])});
}

} // namespace spoofsim
