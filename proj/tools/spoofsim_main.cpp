#include "spoofsim/experiments.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>

namespace {

struct CommonArgs {
    std::string config_path;
    std::vector<std::string> overrides;
    std::string out_path;
    long long seed = -1;
    long long trials = -1;
    double grid_hz = -1.0;
    double angle_res = -1.0;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--config", args.config_path, "configuration file (key=value lines)");
    cmd->add_option("--set", args.overrides, "override, e.g. --set rsu.beam_deg=130")
        ->take_all();
    cmd->add_option("--out", args.out_path, "output path (default: stdout)");
    cmd->add_option("--seed", args.seed, "Monte Carlo master seed");
    cmd->add_option("--trials", args.trials, "Monte Carlo trial count");
    cmd->add_option("--grid-hz", args.grid_hz, "frequency grid resolution in Hz");
    cmd->add_option("--angle-res", args.angle_res, "AoD search resolution in degrees");
}

spoofsim::Config resolve(const CommonArgs& args) {
    spoofsim::Config cfg;
    if (!args.config_path.empty())
        cfg.load_file(args.config_path);
    for (const auto& ov : args.overrides)
        cfg.set(ov);
    if (args.seed >= 0)
        cfg.set("run.seed", std::to_string(args.seed));
    if (args.trials >= 0)
        cfg.set("run.trials", std::to_string(args.trials));
    if (args.grid_hz > 0.0)
        cfg.set("run.grid_hz", std::to_string(args.grid_hz));
    if (args.angle_res > 0.0)
        cfg.set("mle.angle_step_deg", std::to_string(args.angle_res));
    return cfg;
}

int run(const CommonArgs& args,
        const std::function<void(const spoofsim::Config&, std::ostream&)>& fn) {
    try {
        const spoofsim::Config cfg = resolve(args);
        if (args.out_path.empty()) {
            fn(cfg, std::cout);
        } else {
            std::ofstream out(args.out_path);
            if (!out) {
                std::cerr << "error: cannot open output file: " << args.out_path << "\n";
                return 2;
            }
            fn(cfg, out);
        }
        return 0;
    } catch (const spoofsim::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const spoofsim::InfeasibleSceneError& e) {
        std::cerr << "infeasible scene: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"RIS sensing-spoofing simulator for an ISAC roadside unit"};
    app.require_subcommand(1);

    struct Sub {
        const char* name;
        const char* desc;
        void (*fn)(const spoofsim::Config&, std::ostream&);
    };
    const Sub subs[] = {
        {"fig3", "feasible spoofing velocity vs beam steering direction", spoofsim::run_fig3},
        {"fig4", "spoofing velocity range vs number of reflecting elements", spoofsim::run_fig4},
        {"fig5", "Monte Carlo AoD estimates vs spoofing frequency", spoofsim::run_fig5},
        {"feasible-set", "feasibility mask over the spoofing-frequency grid",
         spoofsim::query_feasible_set},
        {"surface", "ambiguity surface (oracle, closed form, approximation)",
         spoofsim::query_surface},
        {"mle", "one Monte Carlo AoD estimation run", spoofsim::query_mle},
        {"scene", "derived-scene report", spoofsim::query_scene},
    };

    std::vector<std::pair<CommonArgs, const Sub*>> bound;
    bound.reserve(std::size(subs));
    for (const auto& s : subs)
        bound.emplace_back(CommonArgs{}, &s);
    for (auto& [args, sub] : bound)
        add_common(app.add_subcommand(sub->name, sub->desc), args);

    CLI11_PARSE(app, argc, argv);

    for (auto& [args, sub] : bound)
        if (app.get_subcommand(sub->name)->parsed())
            return run(args, sub->fn);
    return 1;
}
