#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "polyweno/config.hpp"
#include "polyweno/errors.hpp"

using namespace polyweno;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("polyweno_test_config_" + name);
  fs::remove_all(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("empty text gives the default setup") {
  const ParsedConfig p = parse_config("");
  const SimConfig& c = p.config.sim;
  CHECK(c.R == 5.0);
  CHECK(c.N == 200);
  CHECK(c.V0 == 98.0);
  CHECK(c.op.splitting == SplittingScheme::lambda_family(0.2));
  CHECK(c.rates.eta == 5.0);
  CHECK(c.t_end == 20.0);
  CHECK(c.snapshot_times == std::vector<double>{0.0, 0.5, 6.0, 12.0, 18.0, 20.0});
  CHECK(p.warnings.empty());
  CHECK(p.config == RunConfig{});
}

TEST_CASE("sections, comments and values") {
  const char* text = R"(# comment line
[grid]
N = 100   # trailing comment
R = 4

[rates]
eta = 8
[splitting]
splitting = lambda
lambda = 0.5
discoag_weight = printed
[weno]
scheme = upwind1
weno_epsilon = 1e-8
weno_coefficients = printed
[stepping]
cfl_safety = 1
cfl_literal = true
dt_max = 0.01
t_end = 3
[output]
snapshot_times = 0, 1.5, 3
timeseries_stride = 4
plot_script = false
)";
  const RunConfig c = parse_config(text).config;
  CHECK(c.sim.N == 100);
  CHECK(c.sim.R == 4.0);
  CHECK(c.sim.rates.eta == 8.0);
  CHECK(c.sim.op.splitting.lambda() == 0.5);
  CHECK(c.sim.op.discoag_weight == DiscoagWeight::Printed);
  CHECK(c.sim.op.weno.scheme == SpatialScheme::Upwind1);
  CHECK(c.sim.op.weno.epsilon == 1e-8);
  CHECK(c.sim.op.weno.coefficients == WenoCoefficients::Printed);
  CHECK(c.sim.control.cfl_safety == 1.0);
  CHECK(c.sim.control.cfl_literal);
  CHECK(c.sim.control.dt_max == 0.01);
  CHECK(c.sim.t_end == 3.0);
  CHECK(c.sim.snapshot_times == std::vector<double>{0.0, 1.5, 3.0});
  CHECK(c.sim.timeseries_stride == 4);
  CHECK_FALSE(c.output.plot_script);
}

TEST_CASE("lambda range error names the interval and the line") {
  try {
    parse_config("\nlambda = 1.5\n");
    FAIL("expected an error");
  } catch (const ConfigError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("[0,1]") != std::string::npos);
    CHECK(msg.find("line 2") != std::string::npos);
    CHECK(msg.find("lambda") != std::string::npos);
  }
}

TEST_CASE("Lax-Friedrichs excludes lambda") {
  CHECK(parse_config("splitting = lax_friedrichs").config.sim.op.splitting.is_lax_friedrichs());
  CHECK_THROWS_WITH_AS(parse_config("splitting = lax_friedrichs\nlambda = 0.3"),
                       doctest::Contains("lambda"), ConfigError);
  CHECK_THROWS_AS(parse_config("lambda = 0.3\nsplitting = lax_friedrichs"), ConfigError);
}

TEST_CASE("rejections") {
  CHECK_THROWS_WITH_AS(parse_config("bogus = 1"), doctest::Contains("unknown key"), ConfigError);
  CHECK_THROWS_WITH_AS(parse_config("N = ten"), doctest::Contains("line 1"), ConfigError);
  CHECK_THROWS_AS(parse_config("N = 10"), ConfigError);
  CHECK_THROWS_AS(parse_config("R = -1"), ConfigError);
  CHECK_THROWS_AS(parse_config("[nowhere]"), ConfigError);
  CHECK_THROWS_AS(parse_config("just words"), ConfigError);
  CHECK_THROWS_AS(parse_config("scheme = weno3"), ConfigError);
  CHECK_THROWS_AS(parse_config("snapshot_times = 3, 1"), ConfigError);
  CHECK_THROWS_AS(parse_config("t_end = 1\nsnapshot_times = 0, 2"), ConfigError);
  CHECK_THROWS_AS(parse_config("u0_values = 1, 2, 3"), ConfigError);
  CHECK_THROWS_AS(parse_config("u0_cutoff = 7"), ConfigError);
}

TEST_CASE("overrides apply after the file") {
  const auto p = parse_config("eta = 3\nN = 100", {"eta=6", "splitting = lax_friedrichs"});
  CHECK(p.config.sim.rates.eta == 6.0);
  CHECK(p.config.sim.N == 100);
  CHECK(p.config.sim.op.splitting.is_lax_friedrichs());
  CHECK_THROWS_WITH_AS(parse_config("", {"N=10"}), doctest::Contains("16"), ConfigError);
  CHECK_THROWS_WITH_AS(parse_config("", {"oops"}), doctest::Contains("--set"), ConfigError);
}

TEST_CASE("eta outside the explored range warns") {
  CHECK(parse_config("eta = 1").warnings.size() == 1);
  CHECK(parse_config("eta = 8").warnings.empty());
}

TEST_CASE("print and parse round trip") {
  CHECK(parse_config(print_config(RunConfig{})).config == RunConfig{});

  std::mt19937 rng(17);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    RunConfig c;
    c.sim.N = 16 + static_cast<int>(u(rng) * 300);
    c.sim.R = 1.0 + 9.0 * u(rng);
    c.sim.V0 = 200.0 * u(rng);
    c.sim.rates.eta = 10.0 * u(rng);
    c.sim.rates.kc_amplitude = 1e-5 * u(rng);
    c.sim.op.splitting = trial % 4 == 0 ? SplittingScheme::lax_friedrichs() : SplittingScheme::lambda_family(u(rng));
    c.sim.op.weno.epsilon = 1e-6 * (0.1 + u(rng));
    c.sim.op.weno.scheme = trial % 3 == 0 ? SpatialScheme::Upwind1 : SpatialScheme::Weno5;
    c.sim.op.weno.coefficients = trial % 5 == 0 ? WenoCoefficients::Printed : WenoCoefficients::Standard;
    c.sim.op.enable_coagfrag = trial % 2 == 0;
    c.sim.control.cfl_safety = 0.1 + 0.9 * u(rng);
    if (trial % 2) c.sim.control.dt_max = 0.5 * u(rng) + 1e-3;
    c.sim.t_end = 1.0 + 30.0 * u(rng);
    c.sim.snapshot_times = {0.0, c.sim.t_end * u(rng), c.sim.t_end};
    if (c.sim.snapshot_times[1] > c.sim.t_end) c.sim.snapshot_times[1] = c.sim.t_end;
    c.sim.step_profile.cutoff = 0.1 + 0.5 * u(rng);
    if (trial % 7 == 0) {
      std::vector<double> v(c.sim.N + 1);
      for (double& x : v) x = u(rng);
      v[0] = 0.0;
      c.sim.tabulated_profile = v;
    }
    c.output.plot_script = trial % 2 == 1;
    CHECK(parse_config(print_config(c)).config == c);
  }
}

TEST_CASE("snapshot file names are fixed width") {
  CHECK(snapshot_filename(0.0) == "snapshot_t00000.0000.csv");
  CHECK(snapshot_filename(0.5) == "snapshot_t00000.5000.csv");
  CHECK(snapshot_filename(20.0) == "snapshot_t00020.0000.csv");
}

TEST_CASE("output bundle") {
  RunConfig rc;
  rc.sim.N = 40;
  rc.sim.t_end = 0.5;
  rc.sim.snapshot_times = {0.0, 0.25, 0.5};
  const SimulationResult r = run(rc.sim);
  const fs::path dir = scratch_dir("bundle");
  const auto paths = write_outputs(r, rc, dir);
  CHECK(paths.size() == 6);
  CHECK(fs::exists(dir / "timeseries.csv"));
  CHECK(fs::exists(dir / "run_manifest.cfg"));
  CHECK(fs::exists(dir / "plot.gp"));

  const std::string ts = slurp(dir / "timeseries.csv");
  CHECK(ts.rfind("t,dt,V,polymer_mass,total_mass,min_u,max_u,oscillation\n", 0) == 0);

  for (const auto& snap : r.snapshots) {
    const auto table = read_snapshot_csv(dir / snapshot_filename(snap.requested_time));
    CHECK(table.u == snap.density);
    CHECK(table.x == r.x);
  }

  const std::string manifest = slurp(dir / "run_manifest.cfg");
  CHECK(manifest.find("termination: completed") != std::string::npos);
  CHECK(manifest.find(std::string(kVersion)) != std::string::npos);
  CHECK(parse_config(manifest).config == rc);

  // The manifest alone reproduces the run bitwise.
  const SimulationResult again = run(parse_config(manifest).config.sim);
  CHECK(again.final_density == r.final_density);
  REQUIRE(again.rows.size() == r.rows.size());
  for (std::size_t k = 0; k < r.rows.size(); ++k) CHECK(again.rows[k].V == r.rows[k].V);
  fs::remove_all(dir);
}

TEST_CASE("zero-snapshot bundle") {
  RunConfig rc;
  rc.sim.N = 32;
  rc.sim.t_end = 0.1;
  rc.sim.snapshot_times = {};
  rc.output.plot_script = false;
  const fs::path dir = scratch_dir("nosnap");
  const auto paths = write_outputs(run(rc.sim), rc, dir);
  CHECK(paths.size() == 2);
  fs::remove_all(dir);
}

TEST_CASE("write errors carry the path") {
  const fs::path blocker = scratch_dir("blocker");
  { std::ofstream(blocker) << "file"; }
  RunConfig rc;
  rc.sim.N = 32;
  rc.sim.t_end = 0.05;
  rc.sim.snapshot_times = {};
  CHECK_THROWS_WITH(write_outputs(run(rc.sim), rc, blocker / "sub"), doctest::Contains("blocker"));
  fs::remove_all(blocker);
}
