#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "kswave/error.hpp"
#include "kswave/scenario.hpp"

using namespace kswave;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / ("kswave_test_" + name);
    fs::remove_all(dir);
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST(BuildIc, ExpTailIsOneAtMinusK) {
    const auto g = Grid1D::with_spacing(-20.0, 20.0, 0.05);
    const auto u = build_ic({InitialShape::exp_tail, 1.0, 20.0, {}}, g);
    // The first center sits dx/2 right of -K.
    EXPECT_NEAR(u[0], 2.0 / (std::exp(0.025) + 1.0), 1e-15);
    const auto at = build_ic({InitialShape::exp_tail, 1.0, 20.0, {}}, Grid1D(-20.5, -19.5, 1 + 1));
    EXPECT_NEAR(0.5 * (at[0] + at[1]), 1.0, 1e-3);
}

TEST(BuildIc, RampSupportEndsAtMinusKPlusInverseBeta) {
    const auto g = Grid1D::with_spacing(-20.0, 20.0, 0.05);
    const auto u = build_ic({InitialShape::ramp, 0.1, 20.0, {}}, g);
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (g[i] >= -10.0) EXPECT_EQ(u[i], 0.0);
        EXPECT_NEAR(u[i], std::max(1.0 - 0.1 * (g[i] + 20.0), 0.0), 1e-15);
    }
}

TEST(BuildIc, WoundsAreSymmetric) {
    const auto g = Grid1D::with_spacing(-20.0, 20.0, 0.05);
    for (auto shape : {InitialShape::wound_imperfect, InitialShape::wound_perfect}) {
        const auto u = build_ic({shape, 0.5, 20.0, {}}, g);
        for (std::size_t i = 0; i < g.size(); ++i) EXPECT_EQ(u[i], u[g.size() - 1 - i]);
    }
}

TEST(BuildIc, RejectsBadParameters) {
    const Grid1D g(-1.0, 1.0, 4);
    EXPECT_THROW(build_ic({InitialShape::ramp, 0.0, 20.0, {}}, g), ConfigError);
    EXPECT_THROW(build_ic({InitialShape::ramp, 1.0, -1.0, {}}, g), ConfigError);
    EXPECT_THROW(parse_shape("gaussian"), ConfigError);
}

TEST(BuildIc, CustomCsv) {
    const auto dir = scratch("csv");
    fs::create_directories(dir);
    {
        std::ofstream out(dir / "ic.csv");
        out << "x,u\n-0.75,0.1\n-0.25,0.2\n0.25,0.3\n0.75,0.4\n";
    }
    const Grid1D g(-1.0, 1.0, 4);
    const auto u = build_ic({InitialShape::custom_csv, 1.0, 1.0, dir / "ic.csv"}, g);
    EXPECT_EQ(u, (std::vector<double>{0.1, 0.2, 0.3, 0.4}));
    EXPECT_THROW(build_ic({InitialShape::custom_csv, 1.0, 1.0, dir / "ic.csv"}, Grid1D(-1, 1, 5)),
                 ConfigError);
    fs::remove_all(dir);
}

TEST(Config, ParsesKeyValuesWithComments) {
    const auto kv = parse_key_values("# header\nmodel.chi = 4  # repulsion\n\n kind=pde-sim\n");
    ASSERT_EQ(kv.size(), 2u);
    EXPECT_EQ(kv.at("model.chi"), "4");
    EXPECT_EQ(kv.at("kind"), "pde-sim");
    EXPECT_THROW(parse_key_values("model.chi 4"), ConfigError);
}

TEST(Config, AppliesSettings) {
    const auto cfg = apply_settings(ScenarioConfig{},
                                    parse_key_values("model.chi = 4\nic.name = ramp\nic.beta = 0.1\n"
                                                     "time.t_end = 2\ntime.snapshot_every = 0.5\n"
                                                     "scheme.reaction = off\nwave.max_iter = 7\n"));
    EXPECT_EQ(cfg.model.chi, 4.0);
    EXPECT_EQ(cfg.ic.shape, InitialShape::ramp);
    EXPECT_EQ(cfg.snapshot_times, (std::vector<double>{0.0, 0.5, 1.0, 1.5, 2.0}));
    EXPECT_FALSE(cfg.scheme.reaction_on);
    EXPECT_EQ(cfg.wave.max_iter, 7u);
}

TEST(Config, RejectsUnknownKeysAndBadValues) {
    EXPECT_THROW(apply_settings(ScenarioConfig{}, {{"model.chii", "1"}}), ConfigError);
    EXPECT_THROW(apply_settings(ScenarioConfig{}, {{"model.chi", "abc"}}), ConfigError);
    EXPECT_THROW(apply_settings(ScenarioConfig{}, {{"model.chi", "1x"}}), ConfigError);
    EXPECT_THROW(apply_settings(ScenarioConfig{}, {{"kind", "movie"}}), ConfigError);
    EXPECT_THROW(apply_settings(ScenarioConfig{}, {{"wave.max_iter", "2.5"}}), ConfigError);
    EXPECT_THROW(load_config("/nonexistent/kswave.cfg"), ConfigError);
}

TEST(Presets, MatchFigureParameterizations) {
    for (const auto& n : preset_names()) EXPECT_NO_THROW(preset(n).validate()) << n;
    EXPECT_THROW(preset("fig7"), ConfigError);

    const auto f4 = preset("fig4");
    EXPECT_EQ(f4.ic.shape, InitialShape::exp_tail);
    EXPECT_EQ(f4.ic.beta, 1.0);
    EXPECT_EQ(f4.ic.k, 20.0);
    EXPECT_EQ(f4.model.chi, 1.0);
    EXPECT_EQ(f4.snapshot_times.size(), 21u);

    const auto f6 = preset("fig6");
    EXPECT_EQ(f6.ic.shape, InitialShape::ramp);
    EXPECT_EQ(f6.ic.beta, 0.1);

    for (const char* n : {"fig9", "fig10", "fig11", "fig12"}) {
        const auto c = preset(n);
        EXPECT_EQ(c.model.chi, 4.0);
        EXPECT_EQ(c.model.growth, 4.0);
        EXPECT_EQ(c.model.sigma, 1.0);
        EXPECT_EQ(c.model.capacity, 1.0);
        EXPECT_TRUE(c.analysis.healing);
    }
    EXPECT_EQ(preset("fig10").ic.shape, InitialShape::wound_imperfect);
    EXPECT_EQ(preset("fig10").ic.beta, 0.5);
    EXPECT_EQ(preset("fig12").ic.shape, InitialShape::wound_perfect);
    EXPECT_EQ(preset("fig12").ic.beta, 0.07);
}

TEST(Run, SpeedTableRow) {
    auto cfg = preset("speeds");
    cfg.speeds_chi = {1.0};
    cfg.speeds_sigma = {1.0};
    cfg.output_dir = scratch("speeds");
    const auto summary = run(cfg);
    const auto text = slurp(cfg.output_dir / "speeds.csv");
    EXPECT_EQ(text,
              "chi,sigma,c_star,sharp_lo,sharp_hi,measured\n"
              "1,1,2.8284271247461903,0.33333333333333331,0.5,\n");
    EXPECT_NE(summary.line.find("c_star=2.82843"), std::string::npos);
    fs::remove_all(cfg.output_dir);
}

TEST(Run, Fig4WritesSnapshotsAndIsDeterministic) {
    auto cfg = preset("fig4");
    cfg.output_dir = scratch("fig4a");
    cfg.gnuplot = true;
    const auto a = run(cfg);
    ASSERT_TRUE(a.speed.has_value());
    for (int t = 0; t <= 20; ++t) {
        char name[64];
        std::snprintf(name, sizeof name, "snapshot_t%d.000.csv", t);
        EXPECT_TRUE(fs::exists(cfg.output_dir / name)) << name;
    }
    EXPECT_EQ(slurp(cfg.output_dir / "snapshot_t0.000.csv").substr(0, 6), "x,u,p\n");
    EXPECT_EQ(slurp(cfg.output_dir / "front.csv").substr(0, 4), "t,x\n");
    EXPECT_TRUE(fs::exists(cfg.output_dir / "plot.gp"));

    auto again = cfg;
    again.output_dir = scratch("fig4b");
    run(again);
    for (const auto& f : a.files) {
        EXPECT_EQ(slurp(f), slurp(again.output_dir / f.filename())) << f;
    }
    fs::remove_all(cfg.output_dir);
    fs::remove_all(again.output_dir);
}

TEST(Run, WaveProfileInPhysicalOrientation) {
    auto cfg = preset("wave");
    cfg.wave.half_width = 30.0;
    cfg.wave.dx = 0.1;
    cfg.output_dir = scratch("wave");
    const auto summary = run(cfg);
    ASSERT_TRUE(summary.residual.has_value());
    EXPECT_LT(*summary.residual, 1e-3);
    std::ifstream in(cfg.output_dir / "profile.csv");
    std::string header, first;
    std::getline(in, header);
    std::getline(in, first);
    EXPECT_EQ(header, "x,U,dU,P,dP");
    EXPECT_GT(std::stod(first.substr(first.find(',') + 1)), 0.99);  // occupied behind the front
    fs::remove_all(cfg.output_dir);
}

TEST(Run, RejectsAnchorAboveBound) {
    auto cfg = preset("wave");
    cfg.wave.u0 = 0.3;
    cfg.output_dir = scratch("wave_bad");
    try {
        run(cfg);
        FAIL() << "expected ConfigError";
    } catch (const ConfigError& e) {
        EXPECT_NE(std::string(e.what()).find("sigma^2/(2(sigma^2+chi))"), std::string::npos);
    }
    EXPECT_FALSE(fs::exists(cfg.output_dir));
}

TEST(Run, FailedSolveLeavesNoFiles) {
    auto cfg = preset("wave");
    cfg.wave.max_iter = 2;
    cfg.output_dir = scratch("wave_fail");
    EXPECT_THROW(run(cfg), Error);
    EXPECT_FALSE(fs::exists(cfg.output_dir));
}

TEST(RunSweep, WritesOneDirectoryPerPair) {
    auto cfg = preset("fig3");
    cfg.t_end = 4.0;
    cfg.snapshot_times = {0.0, 4.0};
    cfg.ic.k = 10.0;
    cfg.sweep_chi = {0.5, 1.0};
    cfg.sweep_sigma = {1.0};
    cfg.workers = 2;
    cfg.output_dir = scratch("sweep");
    run_sweep(cfg);
    EXPECT_TRUE(fs::exists(cfg.output_dir / "chi0.5_sigma1" / "front.csv"));
    EXPECT_TRUE(fs::exists(cfg.output_dir / "chi1_sigma1" / "snapshot_t4.000.csv"));
    const auto table = slurp(cfg.output_dir / "speeds.csv");
    EXPECT_EQ(std::count(table.begin(), table.end(), '\n'), 3);
    fs::remove_all(cfg.output_dir);
}
