#include "cnt/kernels.hpp"

#include <cmath>

#include "cnt/error.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cnt::kernels {

std::vector<double> line_modulus_serial(const TubeSymmetry& sym, std::span<const LineSample> samples,
                                        const BandParams& p) {
  std::vector<double> out(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const KVector k = bands::line_k_unchecked(sym, samples[i].m, samples[i].kappa, p.a);
    out[i] = std::abs(bands::structure_factor(k, p));
  }
  return out;
}

std::vector<double> line_modulus_omp(const TubeSymmetry& sym, std::span<const LineSample> samples,
                                     const BandParams& p) {
  std::vector<double> out(samples.size());
  const auto n = static_cast<std::int64_t>(samples.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    const auto& s = samples[static_cast<std::size_t>(i)];
    const KVector k = bands::line_k_unchecked(sym, s.m, s.kappa, p.a);
    out[static_cast<std::size_t>(i)] = std::abs(bands::structure_factor(k, p));
  }
  return out;
}

std::vector<double> line_modulus(const TubeSymmetry& sym, std::span<const LineSample> samples,
                                 const BandParams& p, Exec exec) {
  return exec == Exec::Parallel ? line_modulus_omp(sym, samples, p) : line_modulus_serial(sym, samples, p);
}

ArgMin argmin_serial(std::span<const double> values) {
  if (values.empty()) throw Error(ErrorCode::InvalidArgument, "argmin of an empty range");
  ArgMin best{0, values[0]};
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] < best.value) best = {i, values[i]};
  }
  return best;
}

ArgMin argmin_omp(std::span<const double> values) {
  if (values.empty()) throw Error(ErrorCode::InvalidArgument, "argmin of an empty range");
  ArgMin best{0, values[0]};
  const auto n = static_cast<std::int64_t>(values.size());
#pragma omp parallel
  {
    ArgMin local{0, values[0]};
#pragma omp for schedule(static) nowait
    for (std::int64_t i = 0; i < n; ++i) {
      const auto u = static_cast<std::size_t>(i);
      if (values[u] < local.value || (values[u] == local.value && u < local.index)) local = {u, values[u]};
    }
#pragma omp critical
    {
      if (local.value < best.value || (local.value == best.value && local.index < best.index)) best = local;
    }
  }
  return best;
}

std::vector<double> gap_sweep_serial(const TubeSymmetry& sym, double gamma, double a,
                                     std::span<const double> betas, int resolution) {
  std::vector<double> out(betas.size());
  for (std::size_t i = 0; i < betas.size(); ++i) {
    const BandParams p = bands::magnetic_params(gamma, betas[i], sym.c, a);
    out[i] = bands::band_gap(sym, p, resolution, Exec::Serial).gap;
  }
  return out;
}

std::vector<double> gap_sweep_omp(const TubeSymmetry& sym, double gamma, double a,
                                  std::span<const double> betas, int resolution) {
  if (resolution < 64) throw Error(ErrorCode::OutOfRange, "resolution must be at least 64");
  std::vector<double> out(betas.size());
  const auto n = static_cast<std::int64_t>(betas.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < n; ++i) {
    const auto u = static_cast<std::size_t>(i);
    const BandParams p = bands::magnetic_params(gamma, betas[u], sym.c, a);
    out[u] = bands::band_gap(sym, p, resolution, Exec::Serial).gap;
  }
  return out;
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace cnt::kernels
