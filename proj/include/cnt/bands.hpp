#pragma once

// Tight-binding pi bands of graphene and their zone folding onto a tube.
//
// With onsite energy epsilon and hoppings gamma_j the Bloch energies are
//   E_pm(k) = epsilon pm |gamma_0 e^{i k0 a} + gamma_1 e^{i k1 a} + gamma_2 e^{i k2 a}|.
// On a tube only k with <k,c> in (2pi/a)Z survive; these form n parallel
// lines, parametrised by m (angular quantum number) and kappa (helical
// quasi-momentum along the screw generator omega).

#include <array>
#include <complex>
#include <span>
#include <vector>

#include "cnt/config.hpp"
#include "cnt/geom.hpp"
#include "cnt/tube.hpp"

namespace cnt {

using KVector = RealTriple;

enum class Exec { Serial, Parallel };

struct BandParams {
  double epsilon = 0.0;
  std::array<std::complex<double>, 3> gamma{1.0, 1.0, 1.0};
  double a = kDefaultScale;
  double gamma_scale = 1.0;

  /// epsilon, gamma_0 = gamma_1 = gamma_2 = gamma > 0.
  static BandParams uniform(double gamma = 1.0, double a = kDefaultScale, double epsilon = 0.0);
};

struct EnergyPair {
  double minus = 0.0;
  double plus = 0.0;
};

struct BandTable {
  ChiralityVector c{1, 0, -1};
  std::int64_t m = 0;
  std::vector<double> kappa;
  std::vector<double> E_minus;
  std::vector<double> E_plus;
};

struct GapResult {
  double gap = 0.0;
  KVector argmin_k;
  std::int64_t argmin_m = 0;
  double argmin_kappa = 0.0;
  bool metallic_by_theorem = false;
};

struct SpecialPoints {
  KVector gamma;
  std::array<KVector, 6> K;
  std::array<KVector, 6> M;
};

struct GapSample {
  double beta = 0.0;
  double gap = 0.0;
};

struct Histogram {
  double lo = 0.0;
  double hi = 0.0;
  std::vector<double> counts;
};

namespace bands {

inline constexpr int kDefaultResolution = 4096;

/// gamma_0 e^{i k0 a} + gamma_1 e^{i k1 a} + gamma_2 e^{i k2 a}.
std::complex<double> structure_factor(const KVector& k, const BandParams& p);

EnergyPair dispersion(const KVector& k, const BandParams& p);

/// Uniform-hopping magnitude E(k) = gamma |sum_j e^{i k_j a}|, defined for any
/// real triple (periodic in each coordinate, invariant under k + (a,a,a)).
double graphene_E(const KVector& k, double gamma, double a);

/// Closed hexagon -2pi/3a <= k_i <= 2pi/3a.
bool in_brillouin(const KVector& k, double a, const Tolerances& tol = default_tolerances());

SpecialPoints special_points(double a);

/// Gradient of |S(k)| (the conduction band measured from epsilon), projected
/// to zero sum. Throws SingularPoint where S vanishes.
geom::CanonicalTriple gradient(const KVector& k, const BandParams& p,
                               const Tolerances& tol = default_tolerances());

/// Length of the kappa interval, 2 pi q' / a.
double kappa_period(const TubeSymmetry& sym, double a);

/// The k in span{c, b} with <k,c> = 2 pi m / a and <k,omega> = kappa / q'.
/// line_k_unchecked accepts any real kappa; line_k enforces 0 <= m < n and
/// 0 <= kappa < 2 pi q'/a.
KVector line_k_unchecked(const TubeSymmetry& sym, std::int64_t m, double kappa, double a);
KVector line_k(const TubeSymmetry& sym, std::int64_t m, double kappa, double a);

/// Zeros of S(k) when the three hoppings share one modulus: the K points
/// shifted by -arg(gamma_j)/a. Empty otherwise.
std::vector<KVector> dirac_points(const BandParams& p);

/// kappa values in [0, 2pi q'/a) where line m passes exactly through a zero of S.
std::vector<double> dirac_kappas(const TubeSymmetry& sym, std::int64_t m, const BandParams& p,
                                 const Tolerances& tol = default_tolerances());

/// Uniform kappa grid of `samples` points merged with the dirac_kappas of line m.
std::vector<double> line_grid(const TubeSymmetry& sym, std::int64_t m, int samples, const BandParams& p);

BandTable band_table(const TubeSymmetry& sym, std::int64_t m, int samples, const BandParams& p,
                     Exec exec = Exec::Parallel);

/// One table per m in [0, n).
std::vector<BandTable> band_tables(const TubeSymmetry& sym, int samples, const BandParams& p,
                                   Exec exec = Exec::Parallel);

bool is_metallic(const ChiralityVector& c);

/// 2 min |S| over all allowed lines: grid scan plus golden-section refinement.
GapResult band_gap(const TubeSymmetry& sym, const BandParams& p, int resolution = kDefaultResolution,
                   Exec exec = Exec::Parallel);

/// Hoppings for an axial magnetic field: gamma_j = gamma e^{i beta c_j a}.
BandParams magnetic_params(double gamma, double beta, const ChiralityVector& c, double a);

/// Flux period of the gap, 2 pi / (a ||c||^2).
double aharonov_bohm_period(const TubeSymmetry& sym, double a);

std::vector<GapSample> gap_vs_beta(const TubeSymmetry& sym, double gamma, double a,
                                   std::span<const double> betas, int resolution = kDefaultResolution,
                                   Exec exec = Exec::Parallel);

Histogram density_of_states(std::span<const BandTable> tables, int bins);

}  // namespace bands
}  // namespace cnt
