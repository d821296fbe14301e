#include "cnt/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "cnt/error.hpp"

namespace cnt {

std::size_t FiniteTube::index_of(const LatticeSite& v) const {
  const SymmetryDecomposition d = tube::decompose(tube::canonical_rep(v, sym.c), sym);
  const std::int64_t cell = sym.q_prime * periods;
  // Shifting by y P b moves s by y P q' and m by y P h (q' omega = b + h c').
  const std::int64_t y = tube::floor_div(d.s, cell);
  const std::int64_t s = d.s - y * cell;
  const std::int64_t m = (((d.m + y * periods * sym.screw_offset) % sym.n) + sym.n) % sym.n;
  return static_cast<std::size_t>((d.p * sym.n + m) * cell + s);
}

namespace oracle {

FiniteTube build_finite_tube(const TubeSymmetry& sym, std::int64_t periods) {
  if (periods < 1) throw Error(ErrorCode::OutOfRange, "need at least one period");
  FiniteTube t;
  t.sym = sym;
  t.periods = periods;
  const std::int64_t cell = sym.q_prime * periods;
  for (int p = 0; p < 2; ++p) {
    for (std::int64_t m = 0; m < sym.n; ++m) {
      for (std::int64_t s = 0; s < cell; ++s) t.sites.push_back(tube::compose({s, m, p}, sym).rep);
    }
  }
  t.bonds.resize(t.sites.size());
  for (std::size_t i = 0; i < t.sites.size(); ++i) {
    if (t.index_of(t.sites[i]) != i) throw Error(ErrorCode::InvariantViolation, "site indexing is not a bijection");
    const int nu = honeycomb::nu(t.sites[i]);
    for (int j = 0; j < 3; ++j) {
      t.bonds[i][static_cast<std::size_t>(j)] = Bond{t.index_of(honeycomb::neighbor(t.sites[i], j)), j, nu};
    }
  }
  return t;
}

HermitianMatrix build_hamiltonian(const FiniteTube& tube, const BandParams& p) {
  const std::size_t n = tube.size();
  if (tube.bonds.size() != n) throw Error(ErrorCode::InvariantViolation, "adjacency size mismatch");
  HermitianMatrix h(n);
  for (std::size_t i = 0; i < n; ++i) {
    h(i, i) = p.epsilon;
    for (const Bond& b : tube.bonds[i]) {
      if (b.target >= n) throw Error(ErrorCode::InvariantViolation, "bond target out of range");
      const auto& g = p.gamma[static_cast<std::size_t>(b.label)];
      h(i, b.target) += b.nu == 1 ? g : std::conj(g);
    }
  }
  if (!h.is_hermitian()) throw Error(ErrorCode::InvariantViolation, "inconsistent adjacency: H is not Hermitian");
  return h;
}

std::vector<double> analytic_spectrum(const TubeSymmetry& sym, std::int64_t periods, const BandParams& p) {
  if (periods < 1) throw Error(ErrorCode::OutOfRange, "need at least one period");
  std::vector<double> out;
  const std::int64_t cell = sym.q_prime * periods;
  out.reserve(static_cast<std::size_t>(2 * sym.n * cell));
  for (std::int64_t m = 0; m < sym.n; ++m) {
    for (std::int64_t j = 0; j < cell; ++j) {
      // P <k, b> in (2pi/a) Z with <k,b> = kappa - 2 pi h m / (a n).
      const double kappa = kTwoPi / p.a *
                           (double(j) / double(periods) + double(sym.screw_offset * m) / double(sym.n));
      const EnergyPair e = bands::dispersion(bands::line_k_unchecked(sym, m, kappa, p.a), p);
      out.push_back(e.minus);
      out.push_back(e.plus);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

SpectrumReport compare_spectra(const TubeSymmetry& sym, std::int64_t periods, const BandParams& p, double tol,
                               const JacobiOptions& opts) {
  if (!(tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");
  SpectrumReport r;
  r.tolerance = tol;
  r.finite = eigenvalues(build_hamiltonian(build_finite_tube(sym, periods), p), opts);
  r.analytic = analytic_spectrum(sym, periods, p);
  if (r.finite.size() != r.analytic.size()) {
    throw Error(ErrorCode::InvariantViolation, "finite and analytic spectra differ in length");
  }
  for (std::size_t i = 0; i < r.finite.size(); ++i) {
    r.max_deviation = std::max(r.max_deviation, std::abs(r.finite[i] - r.analytic[i]));
  }
  r.pass = r.max_deviation < tol;
  return r;
}

}  // namespace oracle
}  // namespace cnt
