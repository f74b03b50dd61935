// kswave: run simulations, wave solves, speed tables and sweeps from presets
// or key = value config files.
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "kswave/error.hpp"
#include "kswave/scenario.hpp"

namespace {

struct Common {
    std::string config;
    std::string preset;
    std::string out;
    std::optional<double> dx;
    std::optional<double> cfl;
    std::optional<double> tol;
    bool gnuplot = false;
};

void add_common(CLI::App* sub, Common& c) {
    sub->add_option("--config", c.config, "key = value config file")->check(CLI::ExistingFile);
    sub->add_option("--preset", c.preset, "named scenario (fig3..fig6, fig9..fig12, wave, speeds)");
    sub->add_option("--out", c.out, "output directory");
    sub->add_option("--dx", c.dx, "grid spacing");
    sub->add_option("--cfl", c.cfl, "CFL safety factor");
    sub->add_option("--tol", c.tol, "fixed-point tolerance");
    sub->add_flag("--gnuplot", c.gnuplot, "also write plot.gp");
}

kswave::ScenarioConfig assemble(const Common& c, kswave::ScenarioKind kind,
                                const char* default_preset) {
    using namespace kswave;
    ScenarioConfig cfg;
    cfg.kind = kind;
    if (!c.preset.empty()) {
        cfg = preset(c.preset);
    } else if (default_preset != nullptr) {
        cfg = preset(default_preset);
    }
    if (!c.config.empty()) {
        if (c.preset.empty()) {
            cfg.name = std::filesystem::path(c.config).stem().string();
            cfg.output_dir = std::filesystem::path("out") / cfg.name;
        }
        cfg = load_config(c.config, cfg);
    }
    if (cfg.kind != kind) {
        throw ConfigError("scenario '" + cfg.name + "' is of kind " +
                          std::string(to_string(cfg.kind)) + ", expected " +
                          std::string(to_string(kind)));
    }
    if (!c.out.empty()) cfg.output_dir = c.out;
    if (c.dx) {
        cfg.dx = *c.dx;
        cfg.wave.dx = *c.dx;
    }
    if (c.cfl) cfg.scheme.cfl = *c.cfl;
    if (c.tol) cfg.wave.tol = *c.tol;
    if (c.gnuplot) cfg.gnuplot = true;
    return cfg;
}

const char* error_kind(const std::exception& e) {
    if (dynamic_cast<const kswave::ConfigError*>(&e)) return "config";
    if (dynamic_cast<const kswave::InvalidArgument*>(&e)) return "invalid_argument";
    if (dynamic_cast<const kswave::GridMismatch*>(&e)) return "grid_mismatch";
    if (dynamic_cast<const kswave::InvariantViolation*>(&e)) return "invariant_violation";
    if (dynamic_cast<const kswave::Error*>(&e)) return "solver";
    return "internal";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Traveling waves and front simulations for a repulsion-growth model"};
    app.require_subcommand(1);
    Common simulate_opts, wave_opts, speeds_opts, sweep_opts;
    auto* simulate = app.add_subcommand("simulate", "run a pde-sim scenario");
    auto* wave = app.add_subcommand("wave", "solve for a traveling-wave profile");
    auto* speeds = app.add_subcommand("speeds", "tabulate threshold speeds");
    auto* sweep = app.add_subcommand("sweep", "run a pde-sim scenario over a chi x sigma grid");
    add_common(simulate, simulate_opts);
    add_common(wave, wave_opts);
    add_common(speeds, speeds_opts);
    add_common(sweep, sweep_opts);

    CLI11_PARSE(app, argc, argv);

    std::string command = app.get_subcommands().front()->get_name();
    try {
        kswave::RunSummary summary;
        if (simulate->parsed()) {
            if (simulate_opts.preset.empty() && simulate_opts.config.empty()) {
                throw kswave::ConfigError("simulate needs --preset or --config");
            }
            summary = kswave::run(assemble(simulate_opts, kswave::ScenarioKind::pde_sim, nullptr));
        } else if (wave->parsed()) {
            summary = kswave::run(assemble(wave_opts, kswave::ScenarioKind::wave_solve, "wave"));
        } else if (speeds->parsed()) {
            summary =
                kswave::run(assemble(speeds_opts, kswave::ScenarioKind::speed_table, "speeds"));
        } else {
            if (sweep_opts.config.empty()) throw kswave::ConfigError("sweep needs --config");
            summary = kswave::run_sweep(assemble(sweep_opts, kswave::ScenarioKind::pde_sim, nullptr));
        }
        std::cout << summary.line << '\n';
        return 0;
    } catch (const std::exception& e) {
        nlohmann::json line = {
            {"status", "error"}, {"command", command}, {"kind", error_kind(e)}, {"message", e.what()}};
        std::cerr << line.dump() << '\n';
        return 1;
    }
}
