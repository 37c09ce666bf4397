#pragma once

#include <array>
#include <span>
#include <vector>

#include "polyweno/fluxes.hpp"
#include "polyweno/grid.hpp"

namespace polyweno {

enum class SpatialScheme { Weno5, Upwind1 };

/// Coefficient set of the reconstruction. Standard is the usual fifth-order
/// choice: ideal weight 1/10 on the most upwind candidate (W1,W2,W3) and 1/4 on
/// the first-derivative term of S_2. Printed pairs 3/10 with (W1,W2,W3) and uses
/// 1/2 in S_2; either change alone drops smooth-data accuracy to third order.
enum class WenoCoefficients { Standard, Printed };

struct WenoConfig {
  double epsilon = 1e-6;
  SpatialScheme scheme = SpatialScheme::Weno5;
  WenoCoefficients coefficients = WenoCoefficients::Standard;

  friend bool operator==(const WenoConfig&, const WenoConfig&) = default;
};

/// The ideal weights (3/10, 6/10, 1/10) in Printed order.
inline constexpr std::array<double, 3> kIdealWeights{3.0 / 10.0, 6.0 / 10.0, 1.0 / 10.0};

/// d_r paired with the sub-stencils (W1,W2,W3), (W2,W3,W4), (W3,W4,W5).
std::array<double, 3> ideal_weights(WenoCoefficients set);

using Stencil = std::array<double, 5>;

/// S_1, S_2, S_3 of the three sub-stencils (W1,W2,W3), (W2,W3,W4), (W3,W4,W5).
std::array<double, 3> smoothness_indicators(const Stencil& W,
                                           WenoCoefficients set = WenoCoefficients::Standard);

/// w_r = a_r / sum a, a_r = d_r / (eps + S_r).
std::array<double, 3> nonlinear_weights(const std::array<double, 3>& S, double epsilon,
                                        WenoCoefficients set = WenoCoefficients::Standard);

enum class Orientation { Plus, Minus };

/// Convex combination of the three third-order candidates. The Minus
/// orientation is the mirror image of Plus: it applies the Plus formulas,
/// indicators included, to (W3, W2, W1, W4, W5).
double reconstruct_half_flux(const Stencil& W, Orientation orientation, double epsilon,
                             WenoCoefficients set = WenoCoefficients::Standard);

/// H+ and H- extended with three ghost nodes at each end (indices -3..N+3).
/// All ghost values are zero: u vanishes left of 0, and G+- together with
/// CF vanish right of R.
class GhostedFluxes {
 public:
  static constexpr int kGhosts = 3;

  GhostedFluxes(std::span<const double> Hplus, std::span<const double> Hminus);

  int last() const noexcept { return last_; }
  double plus(int i) const noexcept { return plus_[i + kGhosts]; }
  double minus(int i) const noexcept { return minus_[i + kGhosts]; }

 private:
  int last_;
  std::vector<double> plus_;
  std::vector<double> minus_;
};

/// Approximation of d/dx (H+ + H-) at x_i for i = 1..N; entry 0 is left at 0.
std::vector<double> flux_divergence(const GhostedFluxes& H, const Grid& grid, double epsilon,
                                    WenoCoefficients set = WenoCoefficients::Standard);

/// First-order upwind: (H+_i - H+_{i-1} + H-_{i+1} - H-_i) / dx for i = 1..N.
std::vector<double> upwind1_divergence(const GhostedFluxes& H, const Grid& grid);

}  // namespace polyweno
