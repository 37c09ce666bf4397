#pragma once

#include <span>
#include <vector>

#include "polyweno/grid.hpp"
#include "polyweno/rates.hpp"

namespace polyweno {

/// Decomposition G = G+ + G- of the transport speed used for upwinding.
/// Lambda(l) interpolates between the polymerization/depolymerization split
/// (l = 0) and the sign-of-term split (l = 1); LaxFriedrichs shifts by max|G|.
class SplittingScheme {
 public:
  enum class Kind { Lambda, LaxFriedrichs };

  static SplittingScheme lambda_family(double lambda);
  static SplittingScheme lax_friedrichs() { return SplittingScheme(Kind::LaxFriedrichs, 0.0); }

  Kind kind() const noexcept { return kind_; }
  double lambda() const noexcept { return lambda_; }
  bool is_lax_friedrichs() const noexcept { return kind_ == Kind::LaxFriedrichs; }

  friend bool operator==(const SplittingScheme&, const SplittingScheme&) = default;

 private:
  SplittingScheme(Kind k, double l) : kind_(k), lambda_(l) {}
  Kind kind_;
  double lambda_;
};

/// Which size variable weights the discrete coagulation-fragmentation flux.
/// Inner uses x_j (consistent with the continuous truncated operators);
/// Printed uses x_l.
enum class DiscoagWeight { Inner, Printed };

/// V = V0 + m0 - polymer_mass(density). May go negative on undershoot.
double monomer_concentration(const SystemState& state, const Grid& grid);

/// CF_i = dx^2 sum'_{j=0}^{i} sum'_{l=i+1}^{N} w_{j,l} (kc_{j,l-j} u_j u_{l-j} - kf_{j,l-j} u_l),
/// for i = 0..N with CF_0 = CF_N = 0. Evaluated in O(N^2).
std::vector<double> coagfrag_flux(const KernelTables& tables, std::span<const double> density,
                                  const Grid& grid, DiscoagWeight weight = DiscoagWeight::Inner);

struct TransportSplit {
  std::vector<double> Gplus;
  std::vector<double> Gminus;
  std::vector<double> G;
  double monomers = 0.0;      // V used for this evaluation
  double polymer_mass = 0.0;  // m used for this evaluation
  double lf_shift = 0.0;      // max|G| (Lax-Friedrichs only)
};

TransportSplit split_transport(const KernelTables& tables, const SystemState& state,
                               const SplittingScheme& scheme, const Grid& grid);

struct NodalFluxes {
  std::vector<double> Hplus;
  std::vector<double> Hminus;
  std::vector<double> Gplus;
  std::vector<double> Gminus;
  std::vector<double> G;
  std::vector<double> CF;
};

/// H+_i = G+_i x_i u_i + CF_i, H-_i = G-_i x_i u_i.
NodalFluxes assemble(const Grid& grid, std::span<const double> density, TransportSplit split,
                     std::vector<double> cf);

/// s_i = G_i u_i with the unsplit speed.
std::vector<double> source_term(std::span<const double> G, std::span<const double> density);

}  // namespace polyweno
