#pragma once

// Independent check of the zone-folded spectrum: the tube segment of P
// translational cells with periodic axial boundary is a finite graph, so its
// tight-binding Hamiltonian can be written out and diagonalised directly.

#include <array>
#include <vector>

#include "cnt/bands.hpp"
#include "cnt/hermitian.hpp"
#include "cnt/tube.hpp"

namespace cnt {

struct Bond {
  std::size_t target = 0;
  int label = 0;  // j in v^j
  int nu = 1;     // nu at the source site
};

/// Sites of L modulo Zc + Z(P b), indexed by the reduced (s, m, p) coordinates.
struct FiniteTube {
  TubeSymmetry sym;
  std::int64_t periods = 1;
  std::vector<LatticeSite> sites;
  std::vector<std::array<Bond, 3>> bonds;

  std::size_t size() const { return sites.size(); }
  std::size_t index_of(const LatticeSite& v) const;
};

struct SpectrumReport {
  std::vector<double> finite;
  std::vector<double> analytic;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

namespace oracle {

FiniteTube build_finite_tube(const TubeSymmetry& sym, std::int64_t periods);

HermitianMatrix build_hamiltonian(const FiniteTube& tube, const BandParams& p);

/// E_pm over the n q' P wave vectors allowed on the periodic segment, sorted.
std::vector<double> analytic_spectrum(const TubeSymmetry& sym, std::int64_t periods, const BandParams& p);

SpectrumReport compare_spectra(const TubeSymmetry& sym, std::int64_t periods, const BandParams& p, double tol,
                               const JacobiOptions& opts = {});

}  // namespace oracle
}  // namespace cnt
