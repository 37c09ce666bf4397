#include "polyweno/weno.hpp"

namespace polyweno {

std::array<double, 3> smoothness_indicators(const Stencil& W, WenoCoefficients set) {
  constexpr double c13_12 = 13.0 / 12.0;
  const double a1 = W[0] - 2.0 * W[1] + W[2];
  const double b1 = W[0] - 4.0 * W[1] + 3.0 * W[2];
  const double a2 = W[1] - 2.0 * W[2] + W[3];
  const double b2 = W[1] - W[3];
  const double a3 = W[2] - 2.0 * W[3] + W[4];
  const double b3 = 3.0 * W[2] - 4.0 * W[3] + W[4];
  const double c2 = set == WenoCoefficients::Printed ? 0.5 : 0.25;
  return {c13_12 * a1 * a1 + 0.25 * b1 * b1, c13_12 * a2 * a2 + c2 * b2 * b2,
          c13_12 * a3 * a3 + 0.25 * b3 * b3};
}

std::array<double, 3> ideal_weights(WenoCoefficients set) {
  if (set == WenoCoefficients::Printed) return kIdealWeights;
  return {kIdealWeights[2], kIdealWeights[1], kIdealWeights[0]};
}

std::array<double, 3> nonlinear_weights(const std::array<double, 3>& S, double epsilon, WenoCoefficients set) {
  const auto d = ideal_weights(set);
  std::array<double, 3> a{};
  double total = 0.0;
  for (int r = 0; r < 3; ++r) {
    a[r] = d[r] / (epsilon + S[r]);
    total += a[r];
  }
  for (double& w : a) w /= total;
  return a;
}

namespace {

double combine_plus(const Stencil& W, double epsilon, WenoCoefficients set) {
  const auto w = nonlinear_weights(smoothness_indicators(W, set), epsilon, set);
  const double q1 = W[0] / 3.0 - 7.0 * W[1] / 6.0 + 11.0 * W[2] / 6.0;
  const double q2 = -W[1] / 6.0 + 5.0 * W[2] / 6.0 + W[3] / 3.0;
  const double q3 = W[2] / 3.0 + 5.0 * W[3] / 6.0 - W[4] / 6.0;
  return w[0] * q1 + w[1] * q2 + w[2] * q3;
}

}  // namespace

double reconstruct_half_flux(const Stencil& W, Orientation orientation, double epsilon, WenoCoefficients set) {
  if (orientation == Orientation::Plus) return combine_plus(W, epsilon, set);
  return combine_plus({W[2], W[1], W[0], W[3], W[4]}, epsilon, set);
}

GhostedFluxes::GhostedFluxes(std::span<const double> Hplus, std::span<const double> Hminus)
    : last_(static_cast<int>(Hplus.size()) - 1),
      plus_(Hplus.size() + 2 * kGhosts, 0.0),
      minus_(Hminus.size() + 2 * kGhosts, 0.0) {
  for (std::size_t i = 0; i < Hplus.size(); ++i) {
    plus_[i + kGhosts] = Hplus[i];
    minus_[i + kGhosts] = Hminus[i];
  }
}

std::vector<double> flux_divergence(const GhostedFluxes& H, const Grid& grid, double epsilon,
                                    WenoCoefficients set) {
  const int N = H.last();
  // Interface values at i+1/2 for i = 0..N; the node-i stencils for i+1/2
  // coincide with the node-(i+1) stencils for (i+1)-1/2.
  std::vector<double> face(static_cast<std::size_t>(N) + 1);
  for (int i = 0; i <= N; ++i) {
    const Stencil plus{H.plus(i - 2), H.plus(i - 1), H.plus(i), H.plus(i + 1), H.plus(i + 2)};
    const Stencil minus{H.minus(i + 1), H.minus(i + 2), H.minus(i + 3), H.minus(i), H.minus(i - 1)};
    face[i] = reconstruct_half_flux(plus, Orientation::Plus, epsilon, set) +
              reconstruct_half_flux(minus, Orientation::Minus, epsilon, set);
  }
  // Left face of node 1 is the i = 0 face.
  std::vector<double> D(static_cast<std::size_t>(N) + 1, 0.0);
  const double inv_dx = 1.0 / grid.dx();
  for (int i = 1; i <= N; ++i) D[i] = (face[i] - face[i - 1]) * inv_dx;
  return D;
}

std::vector<double> upwind1_divergence(const GhostedFluxes& H, const Grid& grid) {
  const int N = H.last();
  std::vector<double> D(static_cast<std::size_t>(N) + 1, 0.0);
  const double inv_dx = 1.0 / grid.dx();
  for (int i = 1; i <= N; ++i) {
    D[i] = (H.plus(i) - H.plus(i - 1) + H.minus(i + 1) - H.minus(i)) * inv_dx;
  }
  return D;
}

}  // namespace polyweno
