#pragma once

#include <functional>
#include <limits>
#include <optional>
#include <vector>

#include "polyweno/fluxes.hpp"
#include "polyweno/grid.hpp"
#include "polyweno/rates.hpp"
#include "polyweno/weno.hpp"

namespace polyweno {

struct StepControl {
  double cfl_safety = 0.9;
  std::optional<double> dt_max;
  double dt_min = 1e-12;
  // Use the CFL coagulation/fragmentation terms without their dx factors.
  bool cfl_literal = false;

  void validate() const;
  friend bool operator==(const StepControl&, const StepControl&) = default;
};

/// Options that shape the right-hand side L(u).
struct OperatorOptions {
  SplittingScheme splitting = SplittingScheme::lambda_family(0.2);
  WenoConfig weno;
  DiscoagWeight discoag_weight = DiscoagWeight::Inner;
  bool enable_coagfrag = true;
  bool enable_transport = true;

  friend bool operator==(const OperatorOptions&, const OperatorOptions&) = default;
};

/// The three terms of the stability bound dt <= safety / (G + C + F), in 1/h.
struct CflTerms {
  double transport = 0.0;
  double coagulation = 0.0;
  double fragmentation = 0.0;

  double total() const noexcept { return transport + coagulation + fragmentation; }
};

/// Method-of-lines operator for the conservative truncated equation on a grid.
class SemiDiscreteOperator {
 public:
  SemiDiscreteOperator(Grid grid, KernelTables tables, OperatorOptions options);

  const Grid& grid() const noexcept { return grid_; }
  const KernelTables& tables() const noexcept { return tables_; }
  const OperatorOptions& options() const noexcept { return options_; }

  /// Nodal fluxes H+- with the configured splitting and toggles.
  NodalFluxes fluxes(const SystemState& state) const;

  /// du_i/dt = (G_i u_i - D_i) / x_i for i = 1..N; entry 0 is 0.
  /// Throws DivergenceError on non-finite output.
  std::vector<double> rhs(const SystemState& state) const;

  /// Stability-bound terms for the configured splitting, or for `scheme`.
  CflTerms cfl_terms(const SystemState& state, bool literal) const;
  CflTerms cfl_terms(const SystemState& state, const SplittingScheme& scheme, bool literal) const;

  /// safety / (G + C + F), capped by dt_max; +inf when every term vanishes
  /// and no cap is set. Throws DivergenceError below dt_min.
  double cfl_timestep(const SystemState& state, const StepControl& control) const;

  /// Right-hand side of dV/dt = -dx sum' (V kon_i - koff_i) u_i for a
  /// monomer concentration integrated independently of the mass identity.
  double monomer_rate(double V, std::span<const double> density) const;

 private:
  Grid grid_;
  KernelTables tables_;
  OperatorOptions options_;
  double fragmentation_sup_ = 0.0;  // sup_i (1/2) sum'_{j=1}^{i-1} kf_{j,i-j}, state independent
};

using StageOperator = std::function<std::vector<double>(const std::vector<double>&)>;
using StageHook = std::function<void(std::vector<double>&)>;

/// Three-stage SSP Runge-Kutta step of y' = L(y); `after_stage` runs on each
/// stage value (including the final one).
void ssp_rk3(std::vector<double>& y, double dt, const StageOperator& L,
             const StageHook& after_stage = {});

/// One SSP-RK3 step of the polymer density. Node 0 is re-pinned to 0 after
/// every stage; V is recomputed from each stage density inside rhs().
SystemState rk3_step(const SystemState& state, double dt, const SemiDiscreteOperator& op);

}  // namespace polyweno
