#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "polyweno/grid.hpp"

namespace polyweno {

inline constexpr double kSecondsPerHour = 3600.0;

/// Polymerization, depolymerization, coagulation and fragmentation rates.
/// Parameters are given in second-based units; every evaluation multiplies by
/// `time_unit_scale` (3600 converts to hours).
struct RateModel {
  // k_on(x) = (slope*x + intercept) for x < critical, plateau otherwise [uM^-1 s^-1]
  double kon_slope = 4e-6;
  double kon_intercept = 0.2e-6;
  double kon_critical = 0.5;
  double kon_plateau = 4e-6;
  // k_off = eta * 1e-6 [s^-1]
  double eta = 5.0;
  // k_f(x,y) = A (x+y) / (B + x+y) [s^-1]
  double kf_amplitude = 80e-5;
  double kf_half = 10.0;
  // k_c(x,y) = C |x-y|^{3/2} / (1 + x+y) [uM^-1 s^-1]
  double kc_amplitude = 4e-6;
  double time_unit_scale = kSecondsPerHour;

  void validate() const;
  friend bool operator==(const RateModel&, const RateModel&) = default;
};

double eval_kon(const RateModel& model, double x);
double eval_koff(const RateModel& model, double x);
double eval_kc(const RateModel& model, double x, double y);
double eval_kf(const RateModel& model, double x, double y);

/// Row-major (N+1)x(N+1) symmetric table.
class SymmetricTable {
 public:
  SymmetricTable() = default;
  explicit SymmetricTable(std::size_t n) : n_(n), data_(n * n, 0.0) {}

  std::size_t size() const noexcept { return n_; }
  double operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * n_ + j]; }
  const double* row(std::size_t i) const noexcept { return data_.data() + i * n_; }
  void set(std::size_t i, std::size_t j, double v) noexcept {
    data_[i * n_ + j] = v;
    data_[j * n_ + i] = v;
  }

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

/// Nodal values of the four rates in hour-based units, computed once per run.
struct KernelTables {
  std::vector<double> kon;
  std::vector<double> koff;
  SymmetricTable kc;
  SymmetricTable kf;
};

KernelTables tabulate(const RateModel& model, const Grid& grid);

/// Tabulate arbitrary rate functions (already in the working time unit).
/// The pair kernels are evaluated once per unordered node pair.
KernelTables tabulate(const Grid& grid, const std::function<double(double)>& kon,
                      const std::function<double(double)>& koff,
                      const std::function<double(double, double)>& kc,
                      const std::function<double(double, double)>& kf);

}  // namespace polyweno
