#include "polyweno/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "polyweno/errors.hpp"

namespace polyweno {

void SimConfig::validate() const {
  if (N < kMinCells) {
    throw ConfigError("N must be at least " + std::to_string(kMinCells) + " (got " + std::to_string(N) + ")");
  }
  if (!(R > 0.0)) throw ConfigError("R must be positive");
  rates.validate();
  control.validate();
  if (!(V0 >= 0.0)) throw ConfigError("V0 must be non-negative");
  if (!(t_end > 0.0)) throw ConfigError("t_end must be positive");
  if (timeseries_stride < 1) throw ConfigError("timeseries_stride must be at least 1");
  if (!(blowup_bound > 0.0)) throw ConfigError("blowup_bound must be positive");
  if (!(oscillation_floor >= 0.0)) throw ConfigError("oscillation_floor must be non-negative");
  if (!(op.weno.epsilon > 0.0)) throw ConfigError("weno_epsilon must be positive");
  if (!std::is_sorted(snapshot_times.begin(), snapshot_times.end())) {
    throw ConfigError("snapshot_times must be sorted");
  }
  for (double t : snapshot_times) {
    if (!(t >= 0.0 && t <= t_end)) throw ConfigError("snapshot_times must lie in [0, t_end]");
  }
}

double oscillation_metric(std::span<const double> u, double floor) {
  if (u.size() < 3) return 0.0;
  double umax = 0.0;
  for (double v : u) umax = std::max(umax, std::abs(v));
  if (umax == 0.0) return 0.0;
  const double threshold = floor * umax;
  int changes = 0;
  int last_sign = 0;
  for (std::size_t i = 1; i + 1 < u.size(); ++i) {
    const double d2 = u[i + 1] - 2.0 * u[i] + u[i - 1];
    if (std::abs(d2) <= threshold) continue;
    const int sign = d2 > 0.0 ? 1 : -1;
    if (last_sign != 0 && sign != last_sign) ++changes;
    last_sign = sign;
  }
  return static_cast<double>(changes) / static_cast<double>(u.size() - 1);
}

int count_smoothed_maxima(std::span<const double> u) {
  const std::size_t n = u.size();
  if (n < 3) return 0;
  std::vector<double> s(n);
  s.front() = 0.5 * (u[0] + u[1]);
  s.back() = 0.5 * (u[n - 2] + u[n - 1]);
  for (std::size_t i = 1; i + 1 < n; ++i) s[i] = (u[i - 1] + u[i] + u[i + 1]) / 3.0;

  int maxima = 0;
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && s[j + 1] == s[i]) ++j;  // plateau [i, j]
    const bool left_lower = i == 0 || s[i - 1] < s[i];
    const bool right_lower = j + 1 == n || s[j + 1] < s[j];
    const bool interior_neighbour = i > 0 || j + 1 < n;
    if (left_lower && right_lower && interior_neighbour) ++maxima;
    i = j + 1;
  }
  return maxima;
}

double ode_monomer_check(const SimulationResult& result) {
  if (result.V0 == 0.0) return 0.0;
  double worst = 0.0;
  for (const auto& row : result.rows) worst = std::max(worst, std::abs(row.V_ode - row.V));
  return worst / result.V0;
}

namespace {

struct Extrema {
  double min = 0.0;
  double max = 0.0;
};

Extrema extrema(std::span<const double> u) {
  const auto [lo, hi] = std::minmax_element(u.begin(), u.end());
  return {*lo, *hi};
}

}  // namespace

SimulationResult run(const SimConfig& config, const StepObserver& observer) {
  config.validate();
  Grid grid(config.R, config.N);
  SizeDensity u0 = config.tabulated_profile ? init_density(grid, TabulatedProfile{*config.tabulated_profile})
                                            : init_density(grid, config.step_profile);
  SystemState state = SystemState::initial(grid, std::move(u0), config.V0);
  const SemiDiscreteOperator op(grid, tabulate(config.rates, grid), config.op);
  const std::size_t n = grid.size();

  SimulationResult result;
  result.x.assign(grid.nodes().begin(), grid.nodes().end());
  result.V0 = state.V0;
  result.initial_mass = state.initial_mass;

  std::size_t next_snapshot = 0;
  auto take_snapshots = [&] {
    while (next_snapshot < config.snapshot_times.size() &&
           config.snapshot_times[next_snapshot] <= state.time) {
      result.snapshots.push_back({config.snapshot_times[next_snapshot], state.time, state.density});
      ++next_snapshot;
    }
  };
  auto make_row = [&](double dt, double V_ode, const CflTerms& cfl) {
    TimeseriesRow row;
    row.t = state.time;
    row.dt = dt;
    row.polymer_mass = polymer_mass(grid, state.density);
    row.V = state.V0 + state.initial_mass - row.polymer_mass;
    row.total_mass = row.V + row.polymer_mass;
    const Extrema e = extrema(state.density);
    row.min_u = e.min;
    row.max_u = e.max;
    row.oscillation = oscillation_metric(state.density, config.oscillation_floor);
    row.V_ode = V_ode;
    row.cfl = cfl;
    return row;
  };

  result.rows.push_back(make_row(0.0, monomer_concentration(state, grid), {}));
  take_snapshots();
  if (observer) observer(state, op);

  // Density augmented with an independently integrated monomer concentration.
  std::vector<double> y(state.density);
  y.push_back(result.rows.front().V);
  SystemState stage = state;
  const StageOperator L = [&](const std::vector<double>& z) {
    stage.density.assign(z.begin(), z.begin() + static_cast<std::ptrdiff_t>(n));
    std::vector<double> dz = op.rhs(stage);
    dz.push_back(op.monomer_rate(z[n], stage.density));
    return dz;
  };
  const StageHook pin = [&](std::vector<double>& z) {
    z[0] = 0.0;
    for (double v : z) {
      if (!std::isfinite(v)) throw DivergenceError("non-finite density", stage.time);
    }
  };

  auto next_target = [&] {
    for (std::size_t k = next_snapshot; k < config.snapshot_times.size(); ++k) {
      if (config.snapshot_times[k] > state.time) return config.snapshot_times[k];
    }
    return config.t_end;
  };

  while (state.time < config.t_end) {
    double dt = 0.0;
    double t_new = 0.0;
    CflTerms cfl;
    try {
      cfl = op.cfl_terms(state, config.control.cfl_literal);
      dt = op.cfl_timestep(state, config.control);
      const double target = next_target();
      if (state.time + dt >= target - 1e-12 * std::max(1.0, target)) {
        dt = target - state.time;
        t_new = target;
      } else {
        t_new = state.time + dt;
      }
      stage.time = state.time;
      ssp_rk3(y, dt, L, pin);
    } catch (const DivergenceError& e) {
      result.termination = Diverged{e.reason(), e.time()};
      break;
    }
    state.density.assign(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(n));
    state.time = t_new;
    ++result.steps;

    TimeseriesRow row = make_row(dt, y[n], cfl);
    if (row.V < 0.0 && !result.first_negative_monomer_time) result.first_negative_monomer_time = row.t;
    const bool blown_up = std::max(std::abs(row.min_u), std::abs(row.max_u)) > config.blowup_bound;
    const bool landed = next_snapshot < config.snapshot_times.size() &&
                        config.snapshot_times[next_snapshot] <= state.time;
    if (result.steps % config.timeseries_stride == 0 || landed || blown_up ||
        state.time >= config.t_end) {
      result.rows.push_back(row);
    }
    take_snapshots();
    if (observer) observer(state, op);
    if (blown_up) {
      result.termination = Diverged{"density exceeded blow-up bound", state.time};
      break;
    }
  }
  result.final_density = state.density;
  return result;
}

}  // namespace polyweno
