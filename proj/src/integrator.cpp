#include "polyweno/integrator.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "polyweno/errors.hpp"
#include "polyweno/quadrature.hpp"

namespace polyweno {

void StepControl::validate() const {
  if (!(cfl_safety > 0.0 && cfl_safety <= 1.0)) throw ConfigError("cfl_safety must lie in (0,1]");
  if (!(dt_min > 0.0)) throw ConfigError("dt_min must be positive");
  if (dt_max && !(*dt_max > dt_min)) throw ConfigError("dt_max must exceed dt_min");
}

namespace {

// Trapezoid fallback for the short interior spans that the fragmentation
// bound needs and the composite rule does not cover.
double bound_sum(std::span<const double> f, int lo, int hi) {
  if (hi <= lo) return 0.0;
  if (hi - lo > 6 || lo == 0) return weighted_sum(f, lo, hi);
  double s = 0.5 * (f[lo] + f[hi]);
  for (int k = lo + 1; k < hi; ++k) s += f[k];
  return s;
}

}  // namespace

SemiDiscreteOperator::SemiDiscreteOperator(Grid grid, KernelTables tables, OperatorOptions options)
    : grid_(std::move(grid)), tables_(std::move(tables)), options_(options) {
  if (!(options_.weno.epsilon > 0.0)) throw ConfigError("weno_epsilon must be positive");
  const int N = grid_.cells();
  std::vector<double> f(grid_.size(), 0.0);
  for (int i = 2; i <= N; ++i) {
    for (int j = 1; j < i; ++j) f[j] = tables_.kf(j, i - j);
    fragmentation_sup_ = std::max(fragmentation_sup_, 0.5 * bound_sum(f, 1, i - 1));
  }
}

NodalFluxes SemiDiscreteOperator::fluxes(const SystemState& state) const {
  TransportSplit split = split_transport(tables_, state, options_.splitting, grid_);
  if (!options_.enable_transport) {
    std::fill(split.Gplus.begin(), split.Gplus.end(), 0.0);
    std::fill(split.Gminus.begin(), split.Gminus.end(), 0.0);
    std::fill(split.G.begin(), split.G.end(), 0.0);
  }
  std::vector<double> cf = options_.enable_coagfrag
                               ? coagfrag_flux(tables_, state.density, grid_, options_.discoag_weight)
                               : std::vector<double>(grid_.size(), 0.0);
  return assemble(grid_, state.density, std::move(split), std::move(cf));
}

std::vector<double> SemiDiscreteOperator::rhs(const SystemState& state) const {
  const NodalFluxes f = fluxes(state);
  const GhostedFluxes ghosted(f.Hplus, f.Hminus);
  const std::vector<double> D = options_.weno.scheme == SpatialScheme::Weno5
                                    ? flux_divergence(ghosted, grid_, options_.weno.epsilon, options_.weno.coefficients)
                                    : upwind1_divergence(ghosted, grid_);
  const std::vector<double> s = source_term(f.G, state.density);
  std::vector<double> dudt(grid_.size(), 0.0);
  for (std::size_t i = 1; i < dudt.size(); ++i) {
    dudt[i] = (s[i] - D[i]) / grid_.x(i);
    if (!std::isfinite(dudt[i])) {
      throw DivergenceError("non-finite right-hand side at node " + std::to_string(i), state.time);
    }
  }
  return dudt;
}

CflTerms SemiDiscreteOperator::cfl_terms(const SystemState& state, bool literal) const {
  return cfl_terms(state, options_.splitting, literal);
}

CflTerms SemiDiscreteOperator::cfl_terms(const SystemState& state, const SplittingScheme& scheme,
                                         bool literal) const {
  CflTerms terms;
  const double dx = grid_.dx();
  if (options_.enable_transport) {
    const TransportSplit split = split_transport(tables_, state, scheme, grid_);
    double spread = 0.0;
    for (std::size_t i = 0; i < split.G.size(); ++i) {
      spread = std::max(spread, split.Gplus[i] - split.Gminus[i]);
    }
    terms.transport = spread / dx;
  }
  if (options_.enable_coagfrag) {
    const int N = grid_.cells();
    std::vector<double> f(grid_.size());
    double csup = 0.0;
    for (int i = 0; i <= N; ++i) {
      const double* kc = tables_.kc.row(i);
      for (int j = 0; j <= N; ++j) f[j] = kc[j] * state.density[j];
      csup = std::max(csup, weighted_sum(f, 1, N));
    }
    terms.coagulation = literal ? csup : dx * csup;
    terms.fragmentation = literal ? fragmentation_sup_ : dx * fragmentation_sup_;
  }
  return terms;
}

double SemiDiscreteOperator::cfl_timestep(const SystemState& state, const StepControl& control) const {
  const double rate = cfl_terms(state, control.cfl_literal).total();
  double dt = rate > 0.0 ? control.cfl_safety / rate : std::numeric_limits<double>::infinity();
  if (control.dt_max) dt = std::min(dt, *control.dt_max);
  if (!(dt >= control.dt_min)) {
    throw DivergenceError("time step " + std::to_string(dt) + " below dt_min", state.time);
  }
  return dt;
}

double SemiDiscreteOperator::monomer_rate(double V, std::span<const double> density) const {
  if (!options_.enable_transport) return 0.0;
  std::vector<double> f(grid_.size());
  for (std::size_t i = 0; i < f.size(); ++i) f[i] = (V * tables_.kon[i] - tables_.koff[i]) * density[i];
  return -integrate(f, grid_, 0, grid_.cells());
}

void ssp_rk3(std::vector<double>& y, double dt, const StageOperator& L, const StageHook& after_stage) {
  const std::size_t n = y.size();
  const std::vector<double> y0 = y;

  std::vector<double> k = L(y0);
  std::vector<double> y1(n);
  for (std::size_t i = 0; i < n; ++i) y1[i] = y0[i] + dt * k[i];
  if (after_stage) after_stage(y1);

  k = L(y1);
  std::vector<double> y2(n);
  for (std::size_t i = 0; i < n; ++i) y2[i] = 0.75 * y0[i] + 0.25 * y1[i] + 0.25 * dt * k[i];
  if (after_stage) after_stage(y2);

  k = L(y2);
  for (std::size_t i = 0; i < n; ++i) {
    y[i] = y0[i] / 3.0 + 2.0 / 3.0 * y2[i] + 2.0 / 3.0 * dt * k[i];
  }
  if (after_stage) after_stage(y);
}

SystemState rk3_step(const SystemState& state, double dt, const SemiDiscreteOperator& op) {
  if (!(dt > 0.0)) throw std::invalid_argument("rk3_step requires dt > 0");
  SystemState next = state;
  SystemState stage = state;
  ssp_rk3(
      next.density, dt,
      [&](const std::vector<double>& u) {
        stage.density = u;
        return op.rhs(stage);
      },
      [&](std::vector<double>& u) {
        u[0] = 0.0;
        for (double v : u) {
          if (!std::isfinite(v)) throw DivergenceError("non-finite density", state.time + dt);
        }
      });
  next.time = state.time + dt;
  return next;
}

}  // namespace polyweno
