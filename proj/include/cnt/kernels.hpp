#pragma once

// Data-parallel inner loops of the band code. Every kernel has a serial
// reference and an OpenMP version; both produce bitwise identical output.

#include <cstddef>
#include <span>
#include <vector>

#include "cnt/bands.hpp"

namespace cnt::kernels {

struct LineSample {
  std::int64_t m = 0;
  double kappa = 0.0;
};

/// |S(line_k(m, kappa))| for every sample.
std::vector<double> line_modulus_serial(const TubeSymmetry& sym, std::span<const LineSample> samples,
                                        const BandParams& p);
std::vector<double> line_modulus_omp(const TubeSymmetry& sym, std::span<const LineSample> samples,
                                     const BandParams& p);
std::vector<double> line_modulus(const TubeSymmetry& sym, std::span<const LineSample> samples,
                                 const BandParams& p, Exec exec);

struct ArgMin {
  std::size_t index = 0;
  double value = 0.0;
};

/// Smallest value, lowest index on ties. Empty input is an error.
ArgMin argmin_serial(std::span<const double> values);
ArgMin argmin_omp(std::span<const double> values);

/// band_gap at each beta with magnetic hoppings.
std::vector<double> gap_sweep_serial(const TubeSymmetry& sym, double gamma, double a,
                                     std::span<const double> betas, int resolution);
std::vector<double> gap_sweep_omp(const TubeSymmetry& sym, double gamma, double a,
                                  std::span<const double> betas, int resolution);

/// Number of OpenMP threads available (1 without OpenMP).
int max_threads();

}  // namespace cnt::kernels
