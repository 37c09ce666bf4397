#include "polyweno/fluxes.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "polyweno/errors.hpp"
#include "polyweno/quadrature.hpp"

namespace polyweno {

SplittingScheme SplittingScheme::lambda_family(double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw ConfigError("lambda must lie in [0,1] (got " + std::to_string(lambda) + ")");
  }
  return SplittingScheme(Kind::Lambda, lambda);
}

double monomer_concentration(const SystemState& state, const Grid& grid) {
  return state.V0 + state.initial_mass - polymer_mass(grid, state.density);
}

namespace {

// Integrand h(j,l), j <= l, of the double sum, stored densely by row j.
class PairIntegrand {
 public:
  PairIntegrand(const KernelTables& t, std::span<const double> u, const Grid& grid, DiscoagWeight w)
      : n_(u.size()), h_(n_ * n_, 0.0) {
    for (std::size_t j = 0; j < n_; ++j) {
      const double* kc = t.kc.row(j);
      const double* kf = t.kf.row(j);
      double* row = h_.data() + j * n_;
      for (std::size_t l = j; l < n_; ++l) {
        const double weight = (w == DiscoagWeight::Inner) ? grid.x(j) : grid.x(l);
        const std::size_t d = l - j;
        row[l] = weight * (kc[d] * u[j] * u[d] - kf[d] * u[l]);
      }
    }
  }

  double operator()(int j, int l) const noexcept { return h_[j * n_ + l]; }
  const double* row(int j) const noexcept { return h_.data() + j * n_; }

 private:
  std::size_t n_;
  std::vector<double> h_;
};

}  // namespace

std::vector<double> coagfrag_flux(const KernelTables& tables, std::span<const double> density,
                                  const Grid& grid, DiscoagWeight weight) {
  const int N = grid.cells();
  const int n = N + 1;
  if (density.size() != grid.size() || tables.kc.size() != grid.size()) {
    throw std::invalid_argument("coagfrag_flux: tables, density and grid disagree in size");
  }
  const PairIntegrand h(tables, density, grid, weight);

  // suffix[j*n + k] = sum_{l=k}^{N} h(j,l) for k >= j; one trailing zero per row.
  // The boundary rows sample the integrand at l < j, where it is zero.
  std::vector<double> suffix(static_cast<std::size_t>(n) * (n + 1), 0.0);
  for (int j = 0; j < n; ++j) {
    double* s = suffix.data() + static_cast<std::size_t>(j) * (n + 1);
    const double* r = h.row(j);
    for (int k = N; k >= j; --k) s[k] = s[k + 1] + r[k];
  }
  auto row_tail = [&](int j, int from) {
    return suffix[static_cast<std::size_t>(j) * (n + 1) + std::max(from, j)];
  };
  auto column_head = [&](int l, int upto) {
    double s = 0.0;
    for (int j = 0; j <= upto; ++j) s += h(j, l);
    return s;
  };

  std::vector<double> cf(n, 0.0);
  for (int i = 1; i < N; ++i) {
    const PrimedRow outer = primed_row(0, i, N);
    const PrimedRow inner = primed_row(i + 1, N, N);
    double sum = 0.0;
    if (outer.has_uniform() && inner.has_uniform()) {
      for (int j = 0; j <= i; ++j) sum += row_tail(j, i + 1);
    }
    if (outer.has_uniform()) {
      for (const auto& c : inner.entries()) sum += c.weight * column_head(c.index, i);
    }
    if (inner.has_uniform()) {
      for (const auto& c : outer.entries()) sum += c.weight * row_tail(c.index, i + 1);
    }
    for (const auto& a : outer.entries()) {
      for (const auto& b : inner.entries()) sum += a.weight * b.weight * h(a.index, b.index);
    }
    cf[i] = grid.dx() * grid.dx() * sum;
  }
  return cf;
}

TransportSplit split_transport(const KernelTables& tables, const SystemState& state,
                               const SplittingScheme& scheme, const Grid& grid) {
  const std::size_t n = grid.size();
  TransportSplit s;
  s.polymer_mass = polymer_mass(grid, state.density);
  s.monomers = state.V0 + state.initial_mass - s.polymer_mass;
  s.Gplus.resize(n);
  s.Gminus.resize(n);
  s.G.resize(n);
  for (std::size_t i = 0; i < n; ++i) s.G[i] = s.monomers * tables.kon[i] - tables.koff[i];

  if (scheme.is_lax_friedrichs()) {
    double shift = 0.0;
    for (double g : s.G) shift = std::max(shift, std::abs(g));
    s.lf_shift = shift;
    for (std::size_t i = 0; i < n; ++i) {
      s.Gplus[i] = 0.5 * (s.G[i] + shift);
      s.Gminus[i] = 0.5 * (s.G[i] - shift);
    }
  } else {
    const double lambda = scheme.lambda();
    const double plus_coeff = s.monomers + lambda * s.polymer_mass;
    const double minus_coeff = lambda * s.polymer_mass;
    for (std::size_t i = 0; i < n; ++i) {
      s.Gplus[i] = plus_coeff * tables.kon[i];
      s.Gminus[i] = -minus_coeff * tables.kon[i] - tables.koff[i];
    }
  }
  return s;
}

NodalFluxes assemble(const Grid& grid, std::span<const double> density, TransportSplit split,
                     std::vector<double> cf) {
  const std::size_t n = grid.size();
  NodalFluxes f;
  f.Hplus.resize(n);
  f.Hminus.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double xu = grid.x(i) * density[i];
    f.Hplus[i] = split.Gplus[i] * xu + cf[i];
    f.Hminus[i] = split.Gminus[i] * xu;
  }
  f.Gplus = std::move(split.Gplus);
  f.Gminus = std::move(split.Gminus);
  f.G = std::move(split.G);
  f.CF = std::move(cf);
  return f;
}

std::vector<double> source_term(std::span<const double> G, std::span<const double> density) {
  std::vector<double> s(density.size());
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = G[i] * density[i];
  return s;
}

}  // namespace polyweno
