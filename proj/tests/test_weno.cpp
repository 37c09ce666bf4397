#include <cmath>
#include <random>

#include "doctest.h"
#include "polyweno/weno.hpp"

using namespace polyweno;

namespace {

std::vector<double> divergence_error(int N, double eps, double lo, double hi, bool minus) {
  const Grid g(5.0, N);
  std::vector<double> hp(g.size(), 0.0), hm(g.size(), 0.0);
  for (std::size_t i = 0; i < g.size(); ++i) (minus ? hm : hp)[i] = std::sin(g.x(i));
  const auto D = flux_divergence(GhostedFluxes(hp, hm), g, eps);
  std::vector<double> out;
  for (std::size_t i = 1; i < g.size(); ++i) {
    const double x = g.x(i);
    if (x < lo || x > hi) continue;
    out.push_back(std::abs(D[i] - std::cos(x)));
  }
  return out;
}

double max_of(const std::vector<double>& v) {
  double m = 0.0;
  for (double e : v) m = std::max(m, e);
  return m;
}

}  // namespace

TEST_CASE("smoothness indicators") {
  const auto c = smoothness_indicators({2, 2, 2, 2, 2});
  for (double s : c) CHECK(s == 0.0);
  // Linear data: all three candidates equally smooth, so all indicators agree.
  const auto l = smoothness_indicators({1, 2, 3, 4, 5});
  for (double s : l) CHECK(s == doctest::Approx(1.0));
  const auto lp = smoothness_indicators({1, 2, 3, 4, 5}, WenoCoefficients::Printed);
  CHECK(lp[0] == doctest::Approx(1.0));
  CHECK(lp[1] == doctest::Approx(2.0));
  CHECK(lp[2] == doctest::Approx(1.0));
  const Stencil W{0.3, -1.2, 2.0, 0.7, 4.1};
  Stencil W3;
  for (int k = 0; k < 5; ++k) W3[k] = 3.0 * W[k];
  const auto a = smoothness_indicators(W), b = smoothness_indicators(W3);
  for (int r = 0; r < 3; ++r) CHECK(b[r] == doctest::Approx(9.0 * a[r]).epsilon(1e-14));
}

TEST_CASE("ideal weights and their pairing") {
  const auto printed = nonlinear_weights({0, 0, 0}, 1e-6, WenoCoefficients::Printed);
  CHECK(printed[0] == doctest::Approx(0.3).epsilon(1e-15));
  CHECK(printed[1] == doctest::Approx(0.6).epsilon(1e-15));
  CHECK(printed[2] == doctest::Approx(0.1).epsilon(1e-15));
  const auto standard = nonlinear_weights({0, 0, 0}, 1e-6);
  CHECK(standard[0] == doctest::Approx(0.1).epsilon(1e-15));
  CHECK(standard[1] == doctest::Approx(0.6).epsilon(1e-15));
  CHECK(standard[2] == doctest::Approx(0.3).epsilon(1e-15));

  for (auto p : {WenoCoefficients::Standard, WenoCoefficients::Printed}) {
    const auto d = ideal_weights(p);
    const auto w = nonlinear_weights({0.37, 0.37, 0.37}, 1e-6, p);
    for (int r = 0; r < 3; ++r) CHECK(w[r] == doctest::Approx(d[r]).epsilon(1e-14));
  }

  const auto big = nonlinear_weights({1e30, 0, 0}, 1e-6, WenoCoefficients::Printed);
  CHECK(big[0] < 1e-30);
  CHECK(big[1] / big[2] == doctest::Approx(6.0).epsilon(1e-14));
}

TEST_CASE("weights are a partition of unity") {
  std::mt19937 rng(21);
  std::uniform_real_distribution<double> d(0.0, 10.0);
  std::exponential_distribution<double> e(1.0);
  for (int k = 0; k < 1000; ++k) {
    const std::array<double, 3> S{std::pow(d(rng), 4) * e(rng), d(rng) * e(rng), d(rng)};
    const auto w = nonlinear_weights(S, 1e-6);
    CHECK(w[0] + w[1] + w[2] == doctest::Approx(1.0).epsilon(1e-14));
    for (double v : w) {
      CHECK(v > 0.0);
      CHECK(v < 1.0);
    }
  }
}

TEST_CASE("reconstruction is exact for constants and linears") {
  for (auto o : {Orientation::Plus, Orientation::Minus}) {
    CHECK(reconstruct_half_flux({4, 4, 4, 4, 4}, o, 1e-6) == doctest::Approx(4.0).epsilon(1e-15));
  }
  // Plus stencil (i-2..i+2) for face i+1/2 with H_k = 2k + 1 and i = 0.
  CHECK(reconstruct_half_flux({-3, -1, 1, 3, 5}, Orientation::Plus, 1e-6) == doctest::Approx(2.0).epsilon(1e-14));
  // Minus stencil (i+1, i+2, i+3, i, i-1) for the same face.
  CHECK(reconstruct_half_flux({3, 5, 7, 1, -1}, Orientation::Minus, 1e-6) == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("divergence of zero and linear fluxes") {
  const Grid g(5.0, 50);
  const std::vector<double> zero(g.size(), 0.0);
  for (double v : flux_divergence(GhostedFluxes(zero, zero), g, 1e-6)) CHECK(v == 0.0);
  for (double v : upwind1_divergence(GhostedFluxes(zero, zero), g)) CHECK(v == 0.0);

  std::vector<double> lin(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) lin[i] = 1.5 * g.x(i) + 0.25;
  const auto D = flux_divergence(GhostedFluxes(lin, zero), g, 1e-6);
  for (int i = 4; i <= 46; ++i) CHECK(D[i] == doctest::Approx(1.5).epsilon(1e-12));
  const auto U = upwind1_divergence(GhostedFluxes(lin, zero), g);
  for (int i = 2; i <= 50; ++i) CHECK(U[i] == doctest::Approx(1.5).epsilon(1e-12));
  CHECK(D[0] == 0.0);
  CHECK(std::isfinite(D[50]));
}

TEST_CASE("constant fluxes have zero interior divergence") {
  const Grid g(5.0, 40);
  const std::vector<double> c(g.size(), 2.0);
  const auto D = flux_divergence(GhostedFluxes(c, c), g, 1e-6);
  for (int i = 4; i <= 36; ++i) CHECK(D[i] == 0.0);
}

TEST_CASE("ghost values are zero on both sides") {
  const std::vector<double> hp{1, 2, 3, 4}, hm{5, 6, 7, 8};
  const GhostedFluxes H(hp, hm);
  CHECK(H.last() == 3);
  for (int k = -3; k < 0; ++k) {
    CHECK(H.plus(k) == 0.0);
    CHECK(H.minus(k) == 0.0);
  }
  for (int k = 4; k <= 6; ++k) {
    CHECK(H.plus(k) == 0.0);
    CHECK(H.minus(k) == 0.0);
  }
  CHECK(H.plus(2) == 3.0);
  CHECK(H.minus(0) == 5.0);
}

TEST_CASE("fifth order away from critical points") {
  // sin has critical points at pi/2 and 3pi/2; measure on [2, 4] and [0.5, 1.2].
  for (bool minus : {false, true}) {
    double prev = 0.0;
    for (int N : {50, 100, 200, 400}) {
      const double e = std::max(max_of(divergence_error(N, 1e-6, 2.0, 4.0, minus)),
                                max_of(divergence_error(N, 1e-6, 0.5, 1.2, minus)));
      if (prev > 0.0) CHECK(std::log2(prev / e) >= 4.0);
      prev = e;
    }
  }
}

TEST_CASE("printed coefficients are only third order") {
  auto err = [](int N, WenoCoefficients p) {
    const Grid g(5.0, N);
    std::vector<double> hp(g.size()), hm(g.size(), 0.0);
    for (std::size_t i = 0; i < g.size(); ++i) hp[i] = std::sin(g.x(i));
    const auto D = flux_divergence(GhostedFluxes(hp, hm), g, 1e6, p);
    double e = 0.0;
    for (std::size_t i = 1; i < g.size(); ++i)
      if (g.x(i) >= 1.0 && g.x(i) <= 4.0) e = std::max(e, std::abs(D[i] - std::cos(g.x(i))));
    return e;
  };
  CHECK(std::log2(err(100, WenoCoefficients::Standard) / err(200, WenoCoefficients::Standard)) >= 4.5);
  const double p = std::log2(err(100, WenoCoefficients::Printed) / err(200, WenoCoefficients::Printed));
  CHECK(p == doctest::Approx(3.0).epsilon(0.1));

  // With nonlinear weights the printed indicator alone already costs two orders.
  const Grid g(5.0, 200);
  std::vector<double> hp(g.size()), zero(g.size(), 0.0);
  for (std::size_t i = 0; i < g.size(); ++i) hp[i] = std::sin(g.x(i));
  const GhostedFluxes H(hp, zero);
  double wmax = 0.0;
  for (int i = 40; i <= 80; ++i) {
    const Stencil W{H.plus(i - 2), H.plus(i - 1), H.plus(i), H.plus(i + 1), H.plus(i + 2)};
    const auto w = nonlinear_weights(smoothness_indicators(W, WenoCoefficients::Printed), 1e-6,
                                     WenoCoefficients::Standard);
    wmax = std::max(wmax, std::abs(w[1] - 0.6));
  }
  CHECK(wmax > 0.1);
}

TEST_CASE("epsilon only matters where the indicators are tiny") {
  const Grid g(5.0, 200);
  std::vector<double> hp(g.size()), hm(g.size(), 0.0);
  for (std::size_t i = 0; i < g.size(); ++i) hp[i] = std::sin(g.x(i));
  const auto a = flux_divergence(GhostedFluxes(hp, hm), g, 1e-6);
  const auto b = flux_divergence(GhostedFluxes(hp, hm), g, 1e-8);
  double away = 0.0, anywhere = 0.0, err = 0.0;
  for (std::size_t i = 1; i < g.size(); ++i) {
    const double x = g.x(i);
    if (x < 0.5 || x > 4.5) continue;
    const double d = std::abs(a[i] - b[i]);
    anywhere = std::max(anywhere, d);
    err = std::max(err, std::abs(a[i] - std::cos(x)));
    // S_r ~ (cos x dx)^2 exceeds 1e-6 by a wide margin here.
    if (std::abs(std::cos(x)) > 0.5) away = std::max(away, d);
  }
  CHECK(away < 0.1 * err);
  CHECK(anywhere < 1e-8);
}

TEST_CASE("upwind on step data is monotone") {
  const Grid g(5.0, 40);
  std::vector<double> step(g.size(), 0.0), zero(g.size(), 0.0);
  for (std::size_t i = 0; i < g.size(); ++i) step[i] = g.x(i) < 2.5 ? 1.0 : 0.0;
  const auto U = upwind1_divergence(GhostedFluxes(step, zero), g);
  for (int i = 1; i < 40; ++i) {
    CHECK(U[i] <= 0.0);
    CHECK(U[i] >= -1.0 / g.dx());
  }
}
