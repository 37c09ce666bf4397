#include "polyweno/grid.hpp"

#include <cmath>
#include <string>

#include "polyweno/errors.hpp"
#include "polyweno/quadrature.hpp"

namespace polyweno {

Grid::Grid(double R, int N) : R_(R), N_(N), dx_(0.0) {
  if (!(R > 0.0) || !std::isfinite(R)) {
    throw ConfigError("domain length R must be positive and finite (got " + std::to_string(R) + ")");
  }
  if (N < kMinCells) {
    throw ConfigError("N must be at least " + std::to_string(kMinCells) + " (got " +
                      std::to_string(N) + ")");
  }
  dx_ = R / N;
  nodes_.resize(static_cast<std::size_t>(N) + 1);
  for (int i = 0; i <= N; ++i) nodes_[i] = i * dx_;
  nodes_.back() = R;
}

Grid make_grid(double R, int N) { return Grid(R, N); }

SizeDensity init_density(const Grid& grid, const StepProfile& profile) {
  if (!(profile.height >= 0.0)) {
    throw ConfigError("initial profile height must be non-negative");
  }
  if (!(profile.cutoff > 0.0 && profile.cutoff < grid.length())) {
    throw ConfigError("initial profile cutoff must lie in (0, R)");
  }
  SizeDensity u(grid.size(), 0.0);
  for (std::size_t i = 1; i < u.size(); ++i) {
    if (grid.x(i) <= profile.cutoff) u[i] = profile.height;
  }
  return u;
}

SizeDensity init_density(const Grid& grid, const TabulatedProfile& profile) {
  if (profile.values.size() != grid.size()) {
    throw ConfigError("tabulated profile has " + std::to_string(profile.values.size()) +
                      " values, grid has " + std::to_string(grid.size()) + " nodes");
  }
  SizeDensity u = profile.values;
  for (double v : u) {
    if (!std::isfinite(v)) throw ConfigError("tabulated profile contains a non-finite value");
  }
  u[0] = 0.0;
  return u;
}

double polymer_mass(const Grid& grid, std::span<const double> density) {
  if (density.size() != grid.size()) {
    throw std::invalid_argument("density length does not match grid");
  }
  std::vector<double> moment(density.size());
  for (std::size_t i = 0; i < density.size(); ++i) moment[i] = grid.x(i) * density[i];
  return integrate(moment, grid, 0, grid.cells());
}

SystemState SystemState::initial(const Grid& grid, SizeDensity density, double V0) {
  if (!(V0 >= 0.0)) throw ConfigError("V0 must be non-negative");
  SystemState s;
  s.initial_mass = polymer_mass(grid, density);
  s.density = std::move(density);
  s.V0 = V0;
  return s;
}

}  // namespace polyweno
