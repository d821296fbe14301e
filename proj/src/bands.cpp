#include "cnt/bands.hpp"

#include <algorithm>
#include <cmath>

#include "cnt/error.hpp"
#include "cnt/golden.hpp"
#include "cnt/kernels.hpp"

namespace cnt {

BandParams BandParams::uniform(double gamma, double a, double epsilon) {
  if (!(gamma > 0.0)) throw Error(ErrorCode::InvalidArgument, "gamma must be positive");
  if (!(a > 0.0)) throw Error(ErrorCode::InvalidArgument, "length scale a must be positive");
  BandParams p;
  p.epsilon = epsilon;
  p.gamma = {gamma, gamma, gamma};
  p.a = a;
  p.gamma_scale = gamma;
  return p;
}

namespace bands {

namespace {

constexpr int kRefinedMinima = 8;
constexpr double kRefineWidth = 1e-10;  // golden-section bracket, relative to the kappa period

double reduce_periodic(double x, double period) {
  double r = x - std::floor(x / period) * period;
  if (r >= period) r -= period;
  if (r < 0.0) r = 0.0;
  return r;
}

}  // namespace

std::complex<double> structure_factor(const KVector& k, const BandParams& p) {
  std::complex<double> s{0.0, 0.0};
  for (int j = 0; j < 3; ++j) s += p.gamma[static_cast<std::size_t>(j)] * std::polar(1.0, k[j] * p.a);
  return s;
}

EnergyPair dispersion(const KVector& k, const BandParams& p) {
  const double mod = std::abs(structure_factor(k, p));
  return {p.epsilon - mod, p.epsilon + mod};
}

double graphene_E(const KVector& k, double gamma, double a) {
  const std::complex<double> s = std::polar(1.0, k[0] * a) + std::polar(1.0, k[1] * a) +
                                 std::polar(1.0, k[2] * a);
  return gamma * std::abs(s);
}

bool in_brillouin(const KVector& k, double a, const Tolerances& tol) {
  const double edge = kTwoPi / (3.0 * a);
  if (std::abs(k.sum()) > tol.geometry * std::max(1.0, edge)) return false;
  const double limit = edge * (1.0 + tol.brillouin);
  return std::abs(k[0]) <= limit && std::abs(k[1]) <= limit && std::abs(k[2]) <= limit;
}

SpecialPoints special_points(double a) {
  if (!(a > 0.0)) throw Error(ErrorCode::InvalidArgument, "length scale a must be positive");
  const double t = kTwoPi / (3.0 * a);
  const double h = t / 2.0;
  SpecialPoints sp;
  sp.gamma = {0.0, 0.0, 0.0};
  sp.K = {KVector{t, -t, 0.0}, KVector{-t, t, 0.0},  KVector{t, 0.0, -t},
          KVector{-t, 0.0, t}, KVector{0.0, t, -t},  KVector{0.0, -t, t}};
  sp.M = {KVector{t, -h, -h}, KVector{-t, h, h},  KVector{-h, t, -h},
          KVector{h, -t, h},  KVector{-h, -h, t}, KVector{h, h, -t}};
  return sp;
}

geom::CanonicalTriple gradient(const KVector& k, const BandParams& p, const Tolerances& tol) {
  const std::complex<double> s = structure_factor(k, p);
  const double mod = std::abs(s);
  if (mod <= tol.singular * std::max(1.0, p.gamma_scale)) {
    throw Error(ErrorCode::SingularPoint, "band energy is not differentiable where it vanishes");
  }
  RealTriple g;
  for (int j = 0; j < 3; ++j) {
    const std::complex<double> term = p.gamma[static_cast<std::size_t>(j)] * std::polar(1.0, k[j] * p.a);
    g[j] = -p.a * std::imag(std::conj(s) * term) / mod;
  }
  return geom::canonicalize(g);
}

double kappa_period(const TubeSymmetry& sym, double a) { return kTwoPi * double(sym.q_prime) / a; }

KVector line_k_unchecked(const TubeSymmetry& sym, std::int64_t m, double kappa, double a) {
  const double along_c = kTwoPi * double(m) / (a * double(sym.c_norm2));
  const double c_omega = double(cnt::dot(sym.c.coords(), sym.omega.coords()));
  const double b_omega = double(sym.b_norm2) / double(sym.q_prime);
  const double along_b = (kappa / double(sym.q_prime) - along_c * c_omega) / b_omega;
  const RealTriple c = to_real(sym.c.coords());
  const RealTriple b = to_real(sym.b.coords());
  return along_c * c + along_b * b;
}

KVector line_k(const TubeSymmetry& sym, std::int64_t m, double kappa, double a) {
  if (m < 0 || m >= sym.n) throw Error(ErrorCode::OutOfRange, "m must lie in [0, n)");
  if (!(a > 0.0)) throw Error(ErrorCode::InvalidArgument, "length scale a must be positive");
  if (!(kappa >= 0.0 && kappa < kappa_period(sym, a))) {
    throw Error(ErrorCode::OutOfRange, "kappa must lie in [0, 2 pi q'/a)");
  }
  return line_k_unchecked(sym, m, kappa, a);
}

std::vector<KVector> dirac_points(const BandParams& p) {
  const double r0 = std::abs(p.gamma[0]);
  if (!(r0 > 0.0)) return {};
  for (const auto& g : p.gamma) {
    if (std::abs(std::abs(g) - r0) > 1e-12 * r0) return {};
  }
  const RealTriple shift{std::arg(p.gamma[0]) / p.a, std::arg(p.gamma[1]) / p.a,
                         std::arg(p.gamma[2]) / p.a};
  std::vector<KVector> out;
  for (const KVector& K : special_points(p.a).K) out.push_back(geom::canonicalize(K - shift));
  return out;
}

std::vector<double> dirac_kappas(const TubeSymmetry& sym, std::int64_t m, const BandParams& p,
                                 const Tolerances& tol) {
  const double period = kappa_period(sym, p.a);
  const RealTriple c = to_real(sym.c.coords());
  const RealTriple omega = to_real(sym.omega.coords());
  std::vector<double> out;
  for (const KVector& d : dirac_points(p)) {
    const double x = cnt::dot(d, c) * p.a / kTwoPi;
    const double r = std::round(x);
    if (std::abs(x - r) > tol.line_condition) continue;
    const auto line = static_cast<std::int64_t>(r);
    if (((line % sym.n) + sym.n) % sym.n != m) continue;
    out.push_back(reduce_periodic(double(sym.q_prime) * cnt::dot(d, omega), period));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end(),
                        [&](double x, double y) { return std::abs(x - y) <= 1e-12 * period; }),
            out.end());
  return out;
}

std::vector<double> line_grid(const TubeSymmetry& sym, std::int64_t m, int samples, const BandParams& p) {
  if (samples < 2) throw Error(ErrorCode::OutOfRange, "need at least two samples per line");
  const double period = kappa_period(sym, p.a);
  std::vector<double> grid(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i) grid[static_cast<std::size_t>(i)] = period * double(i) / double(samples);
  const double spacing = period / double(samples);
  for (double kd : dirac_kappas(sym, m, p)) {
    const double nearest = std::round(kd / spacing) * spacing;
    if (std::abs(kd - nearest) > 1e-12 * period) grid.push_back(kd);
  }
  std::sort(grid.begin(), grid.end());
  return grid;
}

std::vector<BandTable> band_tables(const TubeSymmetry& sym, int samples, const BandParams& p, Exec exec) {
  std::vector<kernels::LineSample> flat;
  std::vector<std::size_t> start;
  for (std::int64_t m = 0; m < sym.n; ++m) {
    start.push_back(flat.size());
    for (double kappa : line_grid(sym, m, samples, p)) flat.push_back({m, kappa});
  }
  start.push_back(flat.size());

  const std::vector<double> mod = kernels::line_modulus(sym, flat, p, exec);
  std::vector<BandTable> tables;
  for (std::int64_t m = 0; m < sym.n; ++m) {
    BandTable t;
    t.c = sym.c;
    t.m = m;
    for (std::size_t i = start[static_cast<std::size_t>(m)]; i < start[static_cast<std::size_t>(m) + 1]; ++i) {
      t.kappa.push_back(flat[i].kappa);
      t.E_minus.push_back(p.epsilon - mod[i]);
      t.E_plus.push_back(p.epsilon + mod[i]);
    }
    tables.push_back(std::move(t));
  }
  return tables;
}

BandTable band_table(const TubeSymmetry& sym, std::int64_t m, int samples, const BandParams& p, Exec exec) {
  if (m < 0 || m >= sym.n) throw Error(ErrorCode::OutOfRange, "m must lie in [0, n)");
  std::vector<kernels::LineSample> flat;
  for (double kappa : line_grid(sym, m, samples, p)) flat.push_back({m, kappa});
  const std::vector<double> mod = kernels::line_modulus(sym, flat, p, exec);
  BandTable t;
  t.c = sym.c;
  t.m = m;
  for (std::size_t i = 0; i < flat.size(); ++i) {
    t.kappa.push_back(flat[i].kappa);
    t.E_minus.push_back(p.epsilon - mod[i]);
    t.E_plus.push_back(p.epsilon + mod[i]);
  }
  return t;
}

bool is_metallic(const ChiralityVector& c) { return (c[0] - c[1]) % 3 == 0; }

GapResult band_gap(const TubeSymmetry& sym, const BandParams& p, int resolution, Exec exec) {
  if (resolution < 64) throw Error(ErrorCode::OutOfRange, "resolution must be at least 64");
  const double period = kappa_period(sym, p.a);

  std::vector<kernels::LineSample> flat;
  std::vector<std::size_t> start;
  for (std::int64_t m = 0; m < sym.n; ++m) {
    start.push_back(flat.size());
    for (double kappa : line_grid(sym, m, resolution, p)) flat.push_back({m, kappa});
  }
  start.push_back(flat.size());
  const std::vector<double> mod = kernels::line_modulus(sym, flat, p, exec);

  // Local minima of each periodic line, smallest first.
  struct Candidate {
    double value;
    std::size_t index;
    double lo;
    double hi;
  };
  std::vector<Candidate> cands;
  for (std::size_t line = 0; line + 1 < start.size(); ++line) {
    const std::size_t b = start[line];
    const std::size_t e = start[line + 1];
    const std::size_t len = e - b;
    for (std::size_t i = b; i < e; ++i) {
      const std::size_t prev = i == b ? e - 1 : i - 1;
      const std::size_t next = i + 1 == e ? b : i + 1;
      if (mod[i] <= mod[prev] && mod[i] <= mod[next]) {
        const double lo = i == b ? flat[prev].kappa - period : flat[prev].kappa;
        const double hi = i + 1 == e ? flat[next].kappa + period : flat[next].kappa;
        cands.push_back({mod[i], i, len > 1 ? lo : 0.0, len > 1 ? hi : period});
      }
    }
  }
  std::sort(cands.begin(), cands.end(), [](const Candidate& x, const Candidate& y) {
    return x.value < y.value || (x.value == y.value && x.index < y.index);
  });

  const kernels::ArgMin grid_best = kernels::argmin_serial(mod);
  double best_value = grid_best.value;
  std::int64_t best_m = flat[grid_best.index].m;
  double best_kappa = flat[grid_best.index].kappa;

  const std::size_t refine = std::min<std::size_t>(cands.size(), kRefinedMinima);
  for (std::size_t c = 0; c < refine; ++c) {
    const std::int64_t m = flat[cands[c].index].m;
    auto f = [&](double kappa) { return std::abs(structure_factor(line_k_unchecked(sym, m, kappa, p.a), p)); };
    const LineMinimum lm = golden_section_minimize(f, cands[c].lo, cands[c].hi, kRefineWidth * period);
    if (lm.value < best_value) {
      best_value = lm.value;
      best_m = m;
      best_kappa = lm.x;
    }
  }

  GapResult r;
  r.argmin_m = best_m;
  r.argmin_kappa = reduce_periodic(best_kappa, period);
  r.argmin_k = line_k_unchecked(sym, best_m, r.argmin_kappa, p.a);
  r.gap = 2.0 * best_value;
  r.metallic_by_theorem = is_metallic(sym.c);
  return r;
}

BandParams magnetic_params(double gamma, double beta, const ChiralityVector& c, double a) {
  BandParams p = BandParams::uniform(gamma, a, 0.0);
  for (int j = 0; j < 3; ++j) p.gamma[static_cast<std::size_t>(j)] = std::polar(gamma, beta * double(c[j]) * a);
  return p;
}

double aharonov_bohm_period(const TubeSymmetry& sym, double a) { return kTwoPi / (a * double(sym.c_norm2)); }

std::vector<GapSample> gap_vs_beta(const TubeSymmetry& sym, double gamma, double a,
                                   std::span<const double> betas, int resolution, Exec exec) {
  const std::vector<double> gaps = exec == Exec::Parallel
                                       ? kernels::gap_sweep_omp(sym, gamma, a, betas, resolution)
                                       : kernels::gap_sweep_serial(sym, gamma, a, betas, resolution);
  std::vector<GapSample> out(betas.size());
  for (std::size_t i = 0; i < betas.size(); ++i) out[i] = {betas[i], gaps[i]};
  return out;
}

Histogram density_of_states(std::span<const BandTable> tables, int bins) {
  if (bins < 1) throw Error(ErrorCode::OutOfRange, "need at least one bin");
  Histogram h;
  bool any = false;
  for (const auto& t : tables) {
    for (std::size_t i = 0; i < t.kappa.size(); ++i) {
      if (!any) {
        h.lo = h.hi = t.E_minus[i];
        any = true;
      }
      h.lo = std::min({h.lo, t.E_minus[i], t.E_plus[i]});
      h.hi = std::max({h.hi, t.E_minus[i], t.E_plus[i]});
    }
  }
  if (!any) return h;
  if (h.hi <= h.lo) h.hi = h.lo + 1.0;
  h.counts.assign(static_cast<std::size_t>(bins), 0.0);
  const double width = (h.hi - h.lo) / double(bins);
  auto add = [&](double e) {
    auto idx = static_cast<std::int64_t>(std::floor((e - h.lo) / width));
    idx = std::clamp<std::int64_t>(idx, 0, bins - 1);
    h.counts[static_cast<std::size_t>(idx)] += 1.0;
  };
  for (const auto& t : tables) {
    for (std::size_t i = 0; i < t.kappa.size(); ++i) {
      add(t.E_minus[i]);
      add(t.E_plus[i]);
    }
  }
  return h;
}

}  // namespace bands
}  // namespace cnt
