#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kswave/grid.hpp"
#include "kswave/params.hpp"
#include "kswave/pde.hpp"

namespace kswave {

enum class ScenarioKind { pde_sim, wave_solve, speed_table };

std::string_view to_string(ScenarioKind kind);
ScenarioKind parse_kind(std::string_view text);

enum class InitialShape { exp_tail, ramp, wound_imperfect, wound_perfect, custom_csv };

std::string_view to_string(InitialShape shape);
InitialShape parse_shape(std::string_view text);

struct InitialConditionSpec {
    InitialShape shape = InitialShape::exp_tail;
    double beta = 1.0;
    double k = 20.0;
    std::filesystem::path csv_path;  // custom-csv only: columns x,u
};

// Samples the initial density at the grid centers:
//   exp-tail         2 e^{-beta(x+K)} / (1 + e^{-beta(x+K)})
//   ramp             max(1 - beta (x+K), 0)
//   wound-imperfect  average of exp-tail and its mirror image
//   wound-perfect    average of ramp and its mirror image
//   custom-csv       the u column of a CSV with header x,u
// Throws ConfigError for beta <= 0 or K <= 0 (analytic shapes) or a CSV that
// does not match the grid.
std::vector<double> build_ic(const InitialConditionSpec& spec, const Grid1D& grid);

struct WaveSetup {
    std::optional<double> c;  // defaults to c_star
    double u0 = 0.2;
    std::optional<double> eta;  // defaults to 1/(2 sigma)
    double half_width = 60.0;
    double dx = 0.05;
    double tol = 1e-10;
    std::size_t max_iter = 500;
};

struct AnalysisSetup {
    double level = 0.5;
    double threshold = 0.95;
    double sample_dt = 0.01;  // spacing of the snapshots used for fronts and healing
    bool track_front = true;
    bool healing = false;
};

struct ScenarioConfig {
    std::string name = "custom";
    ScenarioKind kind = ScenarioKind::pde_sim;
    ModelParams model;
    InitialConditionSpec ic;
    std::optional<double> half_width;  // domain [-K, K]; defaults to ic.k
    double dx = 0.05;
    double t_end = 20.0;
    std::vector<double> snapshot_times;  // days; CSV output times
    SchemeConfig scheme;
    AnalysisSetup analysis;
    WaveSetup wave;
    std::vector<double> speeds_chi{1.0};
    std::vector<double> speeds_sigma{1.0};
    std::vector<double> sweep_chi;
    std::vector<double> sweep_sigma;
    std::size_t workers = 0;  // 0: hardware concurrency
    std::filesystem::path output_dir = "out";
    bool gnuplot = false;

    Grid1D grid() const;
    // Throws ConfigError for any parameter the selected kind cannot run with.
    void validate() const;
};

// key = value lines, '#' comments, dotted keys (model.chi = 4).
std::map<std::string, std::string> parse_key_values(std::string_view text);

// Applies key/value pairs on top of `base`. Unknown keys are a ConfigError.
ScenarioConfig apply_settings(ScenarioConfig base, const std::map<std::string, std::string>& kv);

ScenarioConfig load_config(const std::filesystem::path& path,
                           std::optional<ScenarioConfig> base = std::nullopt);

// fig3..fig6, fig9..fig12, wave, speeds.
ScenarioConfig preset(std::string_view name);
std::vector<std::string> preset_names();

struct RunSummary {
    std::string line;
    std::vector<std::filesystem::path> files;
    std::optional<double> speed;
    std::optional<double> healing_time;
    std::optional<double> residual;
};

// Executes one scenario and writes its outputs into config.output_dir:
//   pde-sim      snapshot_t<time>.csv (x,u,p), front.csv (t,x) when tracked
//   wave-solve   profile.csv (x,U,dU,P,dP) in the physical orientation
//   speed-table  speeds.csv (chi,sigma,c_star,sharp_lo,sharp_hi,measured)
// plus plot.gp when config.gnuplot. Files written before a failure are removed.
RunSummary run(const ScenarioConfig& config);

// Runs config (a pde-sim) for every (chi, sigma) in sweep_chi x sweep_sigma
// on a pool of worker threads, each writing into its own subdirectory, and
// writes speeds.csv with the measured front speeds.
RunSummary run_sweep(const ScenarioConfig& config);

}  // namespace kswave
