#include "kswave/scenario.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <functional>
#include <sstream>
#include <thread>

#include "kswave/analysis.hpp"
#include "kswave/elliptic.hpp"
#include "kswave/error.hpp"
#include "kswave/speeds.hpp"
#include "kswave/wave.hpp"

namespace kswave {

namespace fs = std::filesystem;

namespace {

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

double parse_number(const std::string& key, const std::string& text) {
    try {
        std::size_t used = 0;
        const double value = std::stod(text, &used);
        if (used != text.size() || !std::isfinite(value)) throw std::invalid_argument(text);
        return value;
    } catch (const std::exception&) {
        throw ConfigError("key '" + key + "': expected a number, got '" + text + "'");
    }
}

std::size_t parse_count(const std::string& key, const std::string& text) {
    const double value = parse_number(key, text);
    if (value < 0.0 || value != std::floor(value)) {
        throw ConfigError("key '" + key + "': expected a nonnegative integer, got '" + text + "'");
    }
    return static_cast<std::size_t>(value);
}

bool parse_flag(const std::string& key, const std::string& text) {
    if (text == "true" || text == "on" || text == "yes" || text == "1") return true;
    if (text == "false" || text == "off" || text == "no" || text == "0") return false;
    throw ConfigError("key '" + key + "': expected on/off, got '" + text + "'");
}

std::vector<double> parse_list(const std::string& key, const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const std::string t = trim(item);
        if (!t.empty()) out.push_back(parse_number(key, t));
    }
    return out;
}

// Shortest round-trippable text for a double; identical input gives
// identical bytes.
std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string short_num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string snapshot_name(double t) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "snapshot_t%.3f.csv", t);
    return buf;
}

// Tracks files written by a run and deletes them unless the run commits.
class OutputGuard {
public:
    explicit OutputGuard(fs::path dir) : dir_(std::move(dir)) {
        if (!fs::exists(dir_)) {
            fs::create_directories(dir_);
            created_ = true;
        }
    }
    OutputGuard(const OutputGuard&) = delete;
    OutputGuard& operator=(const OutputGuard&) = delete;
    ~OutputGuard() {
        if (committed_) return;
        std::error_code ec;
        for (const auto& f : files_) fs::remove(f, ec);
        if (created_ && fs::is_empty(dir_, ec)) fs::remove(dir_, ec);
    }

    std::ofstream open(const std::string& name) {
        const fs::path path = dir_ / name;
        files_.push_back(path);
        std::ofstream out(path);
        if (!out) throw Error("cannot write " + path.string());
        return out;
    }
    void adopt(const std::vector<fs::path>& files) {
        files_.insert(files_.end(), files.begin(), files.end());
    }
    const std::vector<fs::path>& files() const { return files_; }
    void commit() { committed_ = true; }

private:
    fs::path dir_;
    std::vector<fs::path> files_;
    bool created_ = false;
    bool committed_ = false;
};

std::vector<double> merged_times(double t_end, double sample_dt, const std::vector<double>& extra) {
    std::vector<double> times;
    const auto n = static_cast<std::size_t>(std::floor(t_end / sample_dt + 1e-9));
    for (std::size_t k = 0; k <= n; ++k) times.push_back(static_cast<double>(k) * sample_dt);
    if (t_end - times.back() > 1e-9) times.push_back(t_end);
    times.insert(times.end(), extra.begin(), extra.end());
    std::sort(times.begin(), times.end());
    std::vector<double> unique;
    for (double t : times) {
        if (unique.empty() || t - unique.back() > 1e-9) unique.push_back(t);
    }
    return unique;
}

const SimState* state_at(const std::vector<SimState>& states, double t) {
    for (const auto& s : states) {
        if (std::abs(s.t - t) <= 1e-9) return &s;
    }
    return nullptr;
}

void rethrow_as_config(const std::function<void()>& check, const std::string& context) {
    try {
        check();
    } catch (const ConfigError&) {
        throw;
    } catch (const Error& e) {
        throw ConfigError(context + ": " + e.what());
    }
}

WaveParams resolve_wave(const ScenarioConfig& cfg, const NormalizedParams& norm) {
    WaveParams wp;
    wp.c = cfg.wave.c.value_or(c_star(norm.chi, norm.sigma));
    wp.u0 = cfg.wave.u0;
    wp.eta = cfg.wave.eta.value_or(0.5 / norm.sigma);
    return wp;
}

void write_gnuplot_snapshots(OutputGuard& guard, const std::vector<double>& times,
                             const std::string& title) {
    auto out = guard.open("plot.gp");
    out << "set datafile separator ','\n"
        << "set key autotitle columnhead\n"
        << "set title '" << title << "'\n"
        << "set xlabel 'x'\nset ylabel 'u'\n"
        << "plot";
    for (std::size_t k = 0; k < times.size(); ++k) {
        out << (k ? ", \\\n     " : " ") << "'" << snapshot_name(times[k])
            << "' using 1:2 with lines title 't=" << short_num(times[k]) << "'";
    }
    out << "\n";
}

RunSummary run_pde(const ScenarioConfig& cfg) {
    const Grid1D grid = cfg.grid();
    const auto u0 = build_ic(cfg.ic, grid);
    const auto times = merged_times(cfg.t_end, cfg.analysis.sample_dt, cfg.snapshot_times);
    const auto states = simulate_model(u0, grid, cfg.model, cfg.scheme, cfg.t_end, times);

    OutputGuard guard(cfg.output_dir);
    RunSummary summary;
    for (double t : cfg.snapshot_times) {
        const SimState* s = state_at(states, t);
        if (s == nullptr) throw Error("internal: snapshot missing at t=" + num(t));
        const auto p = discrete_solve(s->u, cfg.model.sigma, grid.dx());
        auto out = guard.open(snapshot_name(t));
        out << "x,u,p\n";
        for (std::size_t i = 0; i < grid.size(); ++i) {
            out << num(grid[i]) << ',' << num(s->u[i]) << ',' << num(p[i]) << '\n';
        }
    }

    std::ostringstream line;
    line << "scenario=" << cfg.name << " kind=pde-sim";
    if (cfg.analysis.track_front) {
        const auto track = track_front(states, cfg.analysis.level, FrontDirection::rightward);
        const auto fit = fit_speed(track);
        summary.speed = fit.speed;
        auto out = guard.open("front.csv");
        out << "t,x\n";
        for (std::size_t k = 0; k < track.times.size(); ++k) {
            out << num(track.times[k]) << ',' << num(track.positions[k]) << '\n';
        }
        line << " speed=" << short_num(fit.speed) << " r2=" << short_num(fit.r_squared);
    }
    if (cfg.analysis.healing) {
        summary.healing_time = healing_time(states, cfg.analysis.threshold);
        line << " healing_time="
             << (summary.healing_time ? short_num(*summary.healing_time) : std::string("not-healed"));
    }
    if (cfg.gnuplot) write_gnuplot_snapshots(guard, cfg.snapshot_times, cfg.name);

    summary.line = line.str();
    summary.files = guard.files();
    guard.commit();
    return summary;
}

RunSummary run_wave(const ScenarioConfig& cfg) {
    const NormalizedParams norm = normalize(cfg.model);
    const WaveParams wp = resolve_wave(cfg, norm);
    const Grid1D grid = Grid1D::symmetric_nodes(cfg.wave.half_width, cfg.wave.dx);
    const Profile init = logistic_initial_profile(grid, wp, norm.chi);
    FixedPointOptions opts;
    opts.tol = cfg.wave.tol;
    opts.max_iter = cfg.wave.max_iter;
    const WaveSolution sol = solve_profile(wp, norm.chi, norm.sigma, init, opts);
    const auto& rep = sol.report;
    if (!rep.converged) {
        std::ostringstream msg;
        msg << "fixed-point iteration did not converge: iterations=" << rep.iterations
            << " distance=" << rep.final_distance << " residual=" << rep.ode_residual
            << " left_tail=" << rep.left_tail << " right_gap=" << rep.right_gap;
        throw Error(msg.str());
    }

    const Profile wave = export_wave(sol.profile);
    const std::size_t m = grid.size();
    OutputGuard guard(cfg.output_dir);
    {
        auto out = guard.open("profile.csv");
        out << "x,U,dU,P,dP\n";
        for (std::size_t i = 0; i < m; ++i) {
            const std::size_t j = m - 1 - i;  // P(-x), -P'(-x)
            out << num(grid[i]) << ',' << num(wave.u()[i]) << ',' << num(wave.du()[i]) << ','
                << num(sol.pressure.p[j]) << ',' << num(-sol.pressure.dp[j]) << '\n';
        }
    }
    if (cfg.gnuplot) {
        auto out = guard.open("plot.gp");
        out << "set datafile separator ','\nset key autotitle columnhead\n"
            << "set title 'wave profile c=" << short_num(wp.c) << "'\n"
            << "plot 'profile.csv' using 1:2 with lines, '' using 1:4 with lines\n";
    }
    RunSummary summary;
    summary.residual = rep.ode_residual;
    std::ostringstream line;
    line << "scenario=" << cfg.name << " kind=wave-solve c=" << short_num(wp.c)
         << " iterations=" << rep.iterations << " distance=" << short_num(rep.final_distance)
         << " residual=" << short_num(rep.ode_residual) << " converged=true";
    summary.line = line.str();
    summary.files = guard.files();
    guard.commit();
    return summary;
}

void write_speed_rows(std::ostream& out, const std::vector<std::array<double, 2>>& pairs,
                      const std::vector<std::optional<double>>& measured) {
    out << "chi,sigma,c_star,sharp_lo,sharp_hi,measured\n";
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        const auto [chi, sigma] = pairs[k];
        const auto bracket = sharp_speed_bracket(chi, sigma);
        out << num(chi) << ',' << num(sigma) << ',' << num(c_star(chi, sigma)) << ','
            << num(bracket.lower) << ',' << num(bracket.upper) << ','
            << (measured[k] ? num(*measured[k]) : std::string()) << '\n';
    }
}

RunSummary run_speeds(const ScenarioConfig& cfg) {
    std::vector<std::array<double, 2>> pairs;
    for (double chi : cfg.speeds_chi) {
        for (double sigma : cfg.speeds_sigma) pairs.push_back({chi, sigma});
    }
    for (const auto& [chi, sigma] : pairs) speed_ordering_check(chi, sigma);
    OutputGuard guard(cfg.output_dir);
    {
        auto out = guard.open("speeds.csv");
        write_speed_rows(out, pairs, std::vector<std::optional<double>>(pairs.size()));
    }
    RunSummary summary;
    std::ostringstream line;
    line << "scenario=" << cfg.name << " kind=speed-table rows=" << pairs.size();
    const auto& [chi0, sigma0] = pairs.front();
    const auto b = sharp_speed_bracket(chi0, sigma0);
    line << " c_star=" << short_num(c_star(chi0, sigma0)) << " sharp=(" << short_num(b.lower)
         << "," << short_num(b.upper) << ")";
    summary.line = line.str();
    summary.files = guard.files();
    guard.commit();
    return summary;
}

}  // namespace

std::string_view to_string(ScenarioKind kind) {
    switch (kind) {
        case ScenarioKind::pde_sim: return "pde-sim";
        case ScenarioKind::wave_solve: return "wave-solve";
        case ScenarioKind::speed_table: return "speed-table";
    }
    return "unknown";
}

ScenarioKind parse_kind(std::string_view text) {
    if (text == "pde-sim") return ScenarioKind::pde_sim;
    if (text == "wave-solve") return ScenarioKind::wave_solve;
    if (text == "speed-table") return ScenarioKind::speed_table;
    throw ConfigError("unknown scenario kind '" + std::string(text) + "'");
}

std::string_view to_string(InitialShape shape) {
    switch (shape) {
        case InitialShape::exp_tail: return "exp-tail";
        case InitialShape::ramp: return "ramp";
        case InitialShape::wound_imperfect: return "wound-imperfect";
        case InitialShape::wound_perfect: return "wound-perfect";
        case InitialShape::custom_csv: return "custom-csv";
    }
    return "unknown";
}

InitialShape parse_shape(std::string_view text) {
    if (text == "exp-tail") return InitialShape::exp_tail;
    if (text == "ramp") return InitialShape::ramp;
    if (text == "wound-imperfect") return InitialShape::wound_imperfect;
    if (text == "wound-perfect") return InitialShape::wound_perfect;
    if (text == "custom-csv") return InitialShape::custom_csv;
    throw ConfigError("unknown initial condition '" + std::string(text) + "'");
}

std::vector<double> build_ic(const InitialConditionSpec& spec, const Grid1D& grid) {
    const std::size_t m = grid.size();
    std::vector<double> u(m);
    if (spec.shape == InitialShape::custom_csv) {
        std::ifstream in(spec.csv_path);
        if (!in) throw ConfigError("cannot read initial condition " + spec.csv_path.string());
        std::string header;
        std::getline(in, header);
        if (trim(header) != "x,u") throw ConfigError("custom-csv header must be 'x,u'");
        std::string row;
        std::size_t i = 0;
        while (std::getline(in, row)) {
            if (trim(row).empty()) continue;
            const auto comma = row.find(',');
            if (comma == std::string::npos || i >= m) {
                throw ConfigError("custom-csv rows do not match the grid");
            }
            u[i] = parse_number("ic.path", trim(row.substr(comma + 1)));
            if (u[i] < 0.0) throw ConfigError("custom-csv densities must be nonnegative");
            ++i;
        }
        if (i != m) throw ConfigError("custom-csv has " + std::to_string(i) + " rows, grid has " +
                                      std::to_string(m) + " cells");
        return u;
    }
    if (!(spec.beta > 0.0)) throw ConfigError("initial condition needs beta > 0");
    if (!(spec.k > 0.0)) throw ConfigError("initial condition needs K > 0");

    const double beta = spec.beta;
    const double k = spec.k;
    // 2 e^{-z} / (1 + e^{-z}) = 2 / (e^{z} + 1)
    const auto exp_tail = [&](double x) { return 2.0 / (std::exp(beta * (x + k)) + 1.0); };
    const auto ramp = [&](double x) { return std::max(1.0 - beta * (x + k), 0.0); };
    for (std::size_t i = 0; i < m; ++i) {
        const double x = grid[i];
        switch (spec.shape) {
            case InitialShape::exp_tail: u[i] = exp_tail(x); break;
            case InitialShape::ramp: u[i] = ramp(x); break;
            case InitialShape::wound_imperfect: u[i] = 0.5 * exp_tail(x) + 0.5 * exp_tail(-x); break;
            case InitialShape::wound_perfect: u[i] = 0.5 * ramp(x) + 0.5 * ramp(-x); break;
            case InitialShape::custom_csv: break;
        }
    }
    return u;
}

Grid1D ScenarioConfig::grid() const {
    const double k = half_width.value_or(ic.k);
    return Grid1D::with_spacing(-k, k, dx);
}

void ScenarioConfig::validate() const {
    rethrow_as_config([&] { model.validate(); }, "model");
    switch (kind) {
        case ScenarioKind::pde_sim: {
            rethrow_as_config([&] { (void)grid(); }, "grid");
            rethrow_as_config([&] { scheme.validate(); }, "scheme");
            if (ic.shape != InitialShape::custom_csv && (!(ic.beta > 0.0) || !(ic.k > 0.0))) {
                throw ConfigError("initial condition needs beta > 0 and K > 0");
            }
            if (!(t_end >= 0.0)) throw ConfigError("t_end must be nonnegative");
            if (!(analysis.sample_dt > 0.0)) throw ConfigError("analysis.dt must be positive");
            if (!(analysis.threshold > 0.0 && analysis.threshold < 1.0)) {
                throw ConfigError("analysis.threshold must lie in (0, 1)");
            }
            for (std::size_t k = 0; k < snapshot_times.size(); ++k) {
                if (snapshot_times[k] < 0.0 || snapshot_times[k] > t_end ||
                    (k > 0 && snapshot_times[k] <= snapshot_times[k - 1])) {
                    throw ConfigError("snapshot times must be increasing and within [0, t_end]");
                }
            }
            break;
        }
        case ScenarioKind::wave_solve: {
            const NormalizedParams norm = normalize(model);
            const WaveParams wp = resolve_wave(*this, norm);
            rethrow_as_config([&] { wp.validate(norm.chi, norm.sigma); }, "wave-solve rejected");
            rethrow_as_config([&] { (void)Grid1D::symmetric_nodes(wave.half_width, wave.dx); },
                              "wave grid");
            if (!(wave.tol > 0.0) || wave.max_iter == 0) {
                throw ConfigError("wave.tol must be positive and wave.max_iter at least 1");
            }
            break;
        }
        case ScenarioKind::speed_table: {
            if (speeds_chi.empty() || speeds_sigma.empty()) {
                throw ConfigError("speeds.chi and speeds.sigma must be nonempty lists");
            }
            for (double v : speeds_chi) {
                if (!(v > 0.0)) throw ConfigError("speeds.chi entries must be positive");
            }
            for (double v : speeds_sigma) {
                if (!(v > 0.0)) throw ConfigError("speeds.sigma entries must be positive");
            }
            break;
        }
    }
}

std::map<std::string, std::string> parse_key_values(std::string_view text) {
    std::map<std::string, std::string> kv;
    std::stringstream ss{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(ss, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const std::string t = trim(line);
        if (t.empty()) continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("line " + std::to_string(lineno) + ": expected 'key = value'");
        }
        const std::string key = trim(std::string_view(t).substr(0, eq));
        const std::string value = trim(std::string_view(t).substr(eq + 1));
        if (key.empty()) throw ConfigError("line " + std::to_string(lineno) + ": empty key");
        kv[key] = value;
    }
    return kv;
}

ScenarioConfig apply_settings(ScenarioConfig cfg, const std::map<std::string, std::string>& kv) {
    using Setter = std::function<void(ScenarioConfig&, const std::string&, const std::string&)>;
    static const std::map<std::string, Setter> setters = {
        {"kind", [](auto& c, auto&, auto& v) { c.kind = parse_kind(v); }},
        {"name", [](auto& c, auto&, auto& v) { c.name = v; }},
        {"model.chi", [](auto& c, auto& k, auto& v) { c.model.chi = parse_number(k, v); }},
        {"model.sigma", [](auto& c, auto& k, auto& v) { c.model.sigma = parse_number(k, v); }},
        {"model.growth", [](auto& c, auto& k, auto& v) { c.model.growth = parse_number(k, v); }},
        {"model.capacity", [](auto& c, auto& k, auto& v) { c.model.capacity = parse_number(k, v); }},
        {"ic.name", [](auto& c, auto&, auto& v) { c.ic.shape = parse_shape(v); }},
        {"ic.beta", [](auto& c, auto& k, auto& v) { c.ic.beta = parse_number(k, v); }},
        {"ic.k", [](auto& c, auto& k, auto& v) { c.ic.k = parse_number(k, v); }},
        {"ic.path", [](auto& c, auto&, auto& v) { c.ic.csv_path = v; }},
        {"grid.half_width", [](auto& c, auto& k, auto& v) { c.half_width = parse_number(k, v); }},
        {"grid.dx", [](auto& c, auto& k, auto& v) { c.dx = parse_number(k, v); }},
        {"time.t_end", [](auto& c, auto& k, auto& v) { c.t_end = parse_number(k, v); }},
        {"time.snapshots", [](auto& c, auto& k, auto& v) { c.snapshot_times = parse_list(k, v); }},
        {"time.snapshot_every",
         [](auto& c, auto& k, auto& v) {
             const double every = parse_number(k, v);
             if (!(every > 0.0)) throw ConfigError("time.snapshot_every must be positive");
             c.snapshot_times.clear();
             const auto n = static_cast<std::size_t>(std::floor(c.t_end / every + 1e-9));
             for (std::size_t i = 0; i <= n; ++i) c.snapshot_times.push_back(every * i);
         }},
        {"scheme.cfl", [](auto& c, auto& k, auto& v) { c.scheme.cfl = parse_number(k, v); }},
        {"scheme.dt_max", [](auto& c, auto& k, auto& v) { c.scheme.dt_max = parse_number(k, v); }},
        {"scheme.reaction", [](auto& c, auto& k, auto& v) { c.scheme.reaction_on = parse_flag(k, v); }},
        {"analysis.level", [](auto& c, auto& k, auto& v) { c.analysis.level = parse_number(k, v); }},
        {"analysis.threshold",
         [](auto& c, auto& k, auto& v) { c.analysis.threshold = parse_number(k, v); }},
        {"analysis.dt", [](auto& c, auto& k, auto& v) { c.analysis.sample_dt = parse_number(k, v); }},
        {"analysis.front",
         [](auto& c, auto& k, auto& v) { c.analysis.track_front = parse_flag(k, v); }},
        {"analysis.healing", [](auto& c, auto& k, auto& v) { c.analysis.healing = parse_flag(k, v); }},
        {"wave.c", [](auto& c, auto& k, auto& v) { c.wave.c = parse_number(k, v); }},
        {"wave.u0", [](auto& c, auto& k, auto& v) { c.wave.u0 = parse_number(k, v); }},
        {"wave.eta", [](auto& c, auto& k, auto& v) { c.wave.eta = parse_number(k, v); }},
        {"wave.half_width",
         [](auto& c, auto& k, auto& v) { c.wave.half_width = parse_number(k, v); }},
        {"wave.dx", [](auto& c, auto& k, auto& v) { c.wave.dx = parse_number(k, v); }},
        {"wave.tol", [](auto& c, auto& k, auto& v) { c.wave.tol = parse_number(k, v); }},
        {"wave.max_iter", [](auto& c, auto& k, auto& v) { c.wave.max_iter = parse_count(k, v); }},
        {"speeds.chi", [](auto& c, auto& k, auto& v) { c.speeds_chi = parse_list(k, v); }},
        {"speeds.sigma", [](auto& c, auto& k, auto& v) { c.speeds_sigma = parse_list(k, v); }},
        {"sweep.chi", [](auto& c, auto& k, auto& v) { c.sweep_chi = parse_list(k, v); }},
        {"sweep.sigma", [](auto& c, auto& k, auto& v) { c.sweep_sigma = parse_list(k, v); }},
        {"sweep.workers", [](auto& c, auto& k, auto& v) { c.workers = parse_count(k, v); }},
        {"output.dir", [](auto& c, auto&, auto& v) { c.output_dir = v; }},
        {"output.gnuplot", [](auto& c, auto& k, auto& v) { c.gnuplot = parse_flag(k, v); }},
    };
    // t_end must be known before snapshot_every expands.
    if (auto it = kv.find("time.t_end"); it != kv.end()) {
        setters.at("time.t_end")(cfg, it->first, it->second);
    }
    for (const auto& [key, value] : kv) {
        const auto it = setters.find(key);
        if (it == setters.end()) throw ConfigError("unknown configuration key '" + key + "'");
        it->second(cfg, key, value);
    }
    return cfg;
}

ScenarioConfig load_config(const fs::path& path, std::optional<ScenarioConfig> base) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config " + path.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    ScenarioConfig start = base.value_or(ScenarioConfig{});
    if (!base) start.name = path.stem().string();
    return apply_settings(std::move(start), parse_key_values(buffer.str()));
}

std::vector<std::string> preset_names() {
    return {"fig3", "fig4", "fig5", "fig6", "fig9", "fig10", "fig11", "fig12", "wave", "speeds"};
}

ScenarioConfig preset(std::string_view name) {
    ScenarioConfig c;
    c.name = std::string(name);
    c.output_dir = fs::path("out") / c.name;
    const auto every = [](double step, double t_end) {
        std::vector<double> t;
        const auto n = static_cast<std::size_t>(std::floor(t_end / step + 1e-9));
        for (std::size_t i = 0; i <= n; ++i) t.push_back(step * i);
        return t;
    };
    const auto front_run = [&](InitialShape shape, double beta) {
        c.kind = ScenarioKind::pde_sim;
        c.model = ModelParams{1.0, 1.0, 1.0, 1.0};
        c.ic = {shape, beta, 20.0, {}};
        c.t_end = 20.0;
        c.analysis.track_front = true;
        c.analysis.healing = false;
    };
    const auto wound_run = [&](InitialShape shape, double beta) {
        c.kind = ScenarioKind::pde_sim;
        c.model = ModelParams{4.0, 1.0, 4.0, 1.0};
        c.ic = {shape, beta, 20.0, {}};
        c.t_end = 7.0;
        c.analysis.track_front = false;
        c.analysis.healing = true;
    };

    if (name == "fig3" || name == "fig4") {
        front_run(InitialShape::exp_tail, 1.0);
        c.snapshot_times = name == "fig3" ? std::vector<double>{0.0, 20.0} : every(1.0, 20.0);
    } else if (name == "fig5" || name == "fig6") {
        front_run(InitialShape::ramp, 0.1);
        c.snapshot_times = name == "fig5" ? std::vector<double>{0.0, 20.0} : every(1.0, 20.0);
    } else if (name == "fig9" || name == "fig10") {
        wound_run(InitialShape::wound_imperfect, 0.5);
        c.snapshot_times = name == "fig9" ? std::vector<double>{0.0, 7.0} : every(0.5, 7.0);
    } else if (name == "fig11" || name == "fig12") {
        wound_run(InitialShape::wound_perfect, 0.07);
        c.snapshot_times = name == "fig11" ? std::vector<double>{0.0, 7.0} : every(0.5, 7.0);
    } else if (name == "wave") {
        c.kind = ScenarioKind::wave_solve;
        c.model = ModelParams{1.0, 1.0, 1.0, 1.0};
        c.wave = WaveSetup{};
        c.wave.eta = 0.5;
    } else if (name == "speeds") {
        c.kind = ScenarioKind::speed_table;
        c.speeds_chi = {0.5, 1.0, 2.0, 4.0};
        c.speeds_sigma = {0.5, 1.0, 2.0};
    } else {
        std::string known;
        for (const auto& n : preset_names()) known += (known.empty() ? "" : ", ") + n;
        throw ConfigError("unknown preset '" + std::string(name) + "' (known: " + known + ")");
    }
    return c;
}

RunSummary run(const ScenarioConfig& config) {
    config.validate();
    switch (config.kind) {
        case ScenarioKind::pde_sim: return run_pde(config);
        case ScenarioKind::wave_solve: return run_wave(config);
        case ScenarioKind::speed_table: return run_speeds(config);
    }
    throw ConfigError("unknown scenario kind");
}

RunSummary run_sweep(const ScenarioConfig& config) {
    if (config.kind != ScenarioKind::pde_sim) {
        throw ConfigError("sweep runs pde-sim scenarios only");
    }
    if (config.sweep_chi.empty() || config.sweep_sigma.empty()) {
        throw ConfigError("sweep needs nonempty sweep.chi and sweep.sigma lists");
    }
    std::vector<ScenarioConfig> jobs;
    std::vector<std::array<double, 2>> pairs;
    for (double chi : config.sweep_chi) {
        for (double sigma : config.sweep_sigma) {
            ScenarioConfig job = config;
            job.model.chi = chi;
            job.model.sigma = sigma;
            job.analysis.track_front = true;
            char dir[96];
            std::snprintf(dir, sizeof dir, "chi%g_sigma%g", chi, sigma);
            job.name = config.name + "/" + dir;
            job.output_dir = config.output_dir / dir;
            job.validate();
            jobs.push_back(std::move(job));
            const NormalizedParams norm = normalize(jobs.back().model);
            pairs.push_back({norm.chi, norm.sigma});
        }
    }

    std::vector<std::optional<RunSummary>> results(jobs.size());
    std::vector<std::exception_ptr> errors(jobs.size());
    std::atomic<std::size_t> next{0};
    const std::size_t hw = std::max<std::size_t>(1, std::thread::hardware_concurrency());
    const std::size_t workers = std::min(jobs.size(), config.workers ? config.workers : hw);
    {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t k = next++; k < jobs.size(); k = next++) {
                    try {
                        results[k] = run(jobs[k]);
                    } catch (...) {
                        errors[k] = std::current_exception();
                    }
                }
            });
        }
    }

    OutputGuard guard(config.output_dir);
    for (const auto& r : results) {
        if (r) guard.adopt(r->files);
    }
    for (std::size_t k = 0; k < jobs.size(); ++k) {
        if (!errors[k]) continue;
        try {
            std::rethrow_exception(errors[k]);
        } catch (const std::exception& e) {
            throw Error("sweep job " + jobs[k].name + " failed: " + e.what());
        }
    }

    std::vector<std::optional<double>> measured(jobs.size());
    for (std::size_t k = 0; k < jobs.size(); ++k) {
        // Speeds in normalized time units, to sit next to c_star.
        measured[k] = *results[k]->speed / jobs[k].model.growth;
    }
    {
        auto out = guard.open("speeds.csv");
        write_speed_rows(out, pairs, measured);
    }
    RunSummary summary;
    summary.line = "scenario=" + config.name + " kind=sweep runs=" + std::to_string(jobs.size());
    summary.files = guard.files();
    guard.commit();
    return summary;
}

}  // namespace kswave
