#include "polyweno/rates.hpp"

#include <cmath>
#include <string>

#include "polyweno/errors.hpp"

namespace polyweno {
namespace {

void require_size(double x) {
  if (!(x >= 0.0)) throw DomainError("rate evaluated at negative size " + std::to_string(x));
}

void require_nonneg(double v, const char* name) {
  if (!(v >= 0.0) || !std::isfinite(v)) {
    throw ConfigError(std::string(name) + " must be finite and non-negative");
  }
}

}  // namespace

void RateModel::validate() const {
  require_nonneg(kon_slope, "kon_slope");
  require_nonneg(kon_intercept, "kon_intercept");
  require_nonneg(kon_critical, "kon_critical");
  require_nonneg(kon_plateau, "kon_plateau");
  require_nonneg(eta, "eta");
  require_nonneg(kf_amplitude, "kf_amplitude");
  require_nonneg(kc_amplitude, "kc_amplitude");
  if (!(kf_half > 0.0)) throw ConfigError("kf_half must be positive");
  if (!(time_unit_scale > 0.0)) throw ConfigError("time_unit_scale must be positive");
}

double eval_kon(const RateModel& m, double x) {
  require_size(x);
  const double rate = x < m.kon_critical ? m.kon_slope * x + m.kon_intercept : m.kon_plateau;
  return rate * m.time_unit_scale;
}

double eval_koff(const RateModel& m, double x) {
  require_size(x);
  return m.eta * 1e-6 * m.time_unit_scale;
}

// Both pair kernels depend on (|x-y|, x+y) only, so swapping the arguments
// takes the same arithmetic path and the results agree bitwise.
double eval_kc(const RateModel& m, double x, double y) {
  require_size(x);
  require_size(y);
  const double d = std::abs(x - y);
  const double s = x + y;
  return m.kc_amplitude * d * std::sqrt(d) / (1.0 + s) * m.time_unit_scale;
}

double eval_kf(const RateModel& m, double x, double y) {
  require_size(x);
  require_size(y);
  const double s = x + y;
  return m.kf_amplitude * s / (m.kf_half + s) * m.time_unit_scale;
}

KernelTables tabulate(const Grid& grid, const std::function<double(double)>& kon,
                      const std::function<double(double)>& koff,
                      const std::function<double(double, double)>& kc,
                      const std::function<double(double, double)>& kf) {
  const std::size_t n = grid.size();
  KernelTables t;
  t.kon.resize(n);
  t.koff.resize(n);
  t.kc = SymmetricTable(n);
  t.kf = SymmetricTable(n);
  for (std::size_t i = 0; i < n; ++i) {
    t.kon[i] = kon(grid.x(i));
    t.koff[i] = koff(grid.x(i));
    for (std::size_t j = 0; j <= i; ++j) {
      t.kc.set(i, j, kc(grid.x(i), grid.x(j)));
      t.kf.set(i, j, kf(grid.x(i), grid.x(j)));
    }
  }
  return t;
}

KernelTables tabulate(const RateModel& model, const Grid& grid) {
  model.validate();
  return tabulate(
      grid, [&](double x) { return eval_kon(model, x); }, [&](double x) { return eval_koff(model, x); },
      [&](double x, double y) { return eval_kc(model, x, y); },
      [&](double x, double y) { return eval_kf(model, x, y); });
}

}  // namespace polyweno
