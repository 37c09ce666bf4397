#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace polyweno {

/// Smallest admissible cell count: the end-corrected quadrature rows reach
/// 8 nodes in from each boundary and the WENO stencils span 7 nodes.
inline constexpr int kMinCells = 16;

/// Uniform node set x_i = i*dx, i = 0..N, on [0, R].
class Grid {
 public:
  Grid(double R, int N);

  double length() const noexcept { return R_; }
  int cells() const noexcept { return N_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  double dx() const noexcept { return dx_; }
  double x(std::size_t i) const noexcept { return nodes_[i]; }
  std::span<const double> nodes() const noexcept { return nodes_; }

 private:
  double R_;
  int N_;
  double dx_;
  std::vector<double> nodes_;
};

Grid make_grid(double R, int N);

/// Nodal polymer size density u_i ~ u(x_i, t), length N+1, with u_0 = 0.
using SizeDensity = std::vector<double>;

/// Initial profile: either a step of height h on [0, cutoff] or a tabulated
/// set of N+1 nodal values.
struct StepProfile {
  double height = 2.6;
  double cutoff = 0.4;
  friend bool operator==(const StepProfile&, const StepProfile&) = default;
};

struct TabulatedProfile {
  std::vector<double> values;
};

SizeDensity init_density(const Grid& grid, const StepProfile& profile);
SizeDensity init_density(const Grid& grid, const TabulatedProfile& profile);

/// Discrete first moment dx * sum' x_j u_j over the full span.
double polymer_mass(const Grid& grid, std::span<const double> density);

/// Evolving state. `initial_mass` is frozen at construction and never
/// recomputed from the evolving density.
struct SystemState {
  SizeDensity density;
  double time = 0.0;
  double V0 = 0.0;
  double initial_mass = 0.0;

  static SystemState initial(const Grid& grid, SizeDensity density, double V0);
};

}  // namespace polyweno
