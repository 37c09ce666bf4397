#pragma once

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "polyweno/grid.hpp"
#include "polyweno/integrator.hpp"
#include "polyweno/rates.hpp"

namespace polyweno {

struct SimConfig {
  double R = 5.0;
  int N = 200;
  RateModel rates;
  OperatorOptions op;
  StepControl control;
  double V0 = 98.0;
  StepProfile step_profile;
  std::optional<std::vector<double>> tabulated_profile;
  double t_end = 20.0;
  std::vector<double> snapshot_times{0.0, 0.5, 6.0, 12.0, 18.0, 20.0};
  int timeseries_stride = 1;
  double blowup_bound = 1e6;
  double oscillation_floor = 1e-3;

  /// Throws ConfigError on inconsistent values.
  void validate() const;
  friend bool operator==(const SimConfig&, const SimConfig&) = default;
};

struct TimeseriesRow {
  double t = 0.0;
  double dt = 0.0;
  double V = 0.0;
  double polymer_mass = 0.0;
  double total_mass = 0.0;
  double min_u = 0.0;
  double max_u = 0.0;
  double oscillation = 0.0;
  // Not part of the CSV: monomers integrated from their own ODE, and the
  // stability-bound terms used for the step that produced this row.
  double V_ode = 0.0;
  CflTerms cfl;
};

struct Snapshot {
  double requested_time = 0.0;
  double t = 0.0;
  std::vector<double> density;
};

struct Completed {};
struct Diverged {
  std::string reason;
  double t = 0.0;
};
using Termination = std::variant<Completed, Diverged>;

struct SimulationResult {
  std::vector<TimeseriesRow> rows;
  std::vector<Snapshot> snapshots;
  Termination termination = Completed{};
  std::vector<double> x;
  std::vector<double> final_density;
  double V0 = 0.0;
  double initial_mass = 0.0;
  long steps = 0;
  std::optional<double> first_negative_monomer_time;

  bool completed() const noexcept { return std::holds_alternative<Completed>(termination); }
};

/// Called with every accepted state (including the initial one).
using StepObserver = std::function<void(const SystemState&, const SemiDiscreteOperator&)>;

/// Integrate from t = 0 to t_end. Numerical blow-up ends the run with a
/// Diverged termination instead of throwing.
SimulationResult run(const SimConfig& config, const StepObserver& observer = {});

/// Sign changes of the second difference, over interior nodes where it
/// exceeds floor * max|u|, divided by N.
double oscillation_metric(std::span<const double> density, double floor = 1e-3);

/// max_t |V_ode(t) - V(t)| / V0 over the recorded rows; 0 when V0 == 0.
double ode_monomer_check(const SimulationResult& result);

/// Local maxima of the 3-point moving average (plateaus count once).
int count_smoothed_maxima(std::span<const double> density);

}  // namespace polyweno
