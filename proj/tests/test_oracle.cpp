#include <doctest.h>

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "cnt/error.hpp"
#include "cnt/oracle.hpp"

using namespace cnt;
using namespace cnt::oracle;

namespace {

constexpr double a = kDefaultScale;

std::vector<double> eigen_reference(const HermitianMatrix& h) {
  Eigen::MatrixXcd m(h.dim(), h.dim());
  for (std::size_t i = 0; i < h.dim(); ++i)
    for (std::size_t j = 0; j < h.dim(); ++j) m(Eigen::Index(i), Eigen::Index(j)) = h(i, j);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m, Eigen::EigenvaluesOnly);
  std::vector<double> out(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
  return out;
}

}  // namespace

TEST_CASE("dense eigenvalues on small matrices") {
  HermitianMatrix one(1);
  one(0, 0) = 2.5;
  CHECK(eigenvalues(one) == std::vector<double>{2.5});

  HermitianMatrix two(2);
  two(0, 0) = 1.0;
  two(1, 1) = -1.0;
  two(0, 1) = {0.0, 2.0};
  two(1, 0) = {0.0, -2.0};
  const auto ev = eigenvalues(two);
  CHECK(ev[0] == doctest::Approx(-std::sqrt(5.0)).epsilon(1e-14));
  CHECK(ev[1] == doctest::Approx(std::sqrt(5.0)).epsilon(1e-14));

  HermitianMatrix bad(2);
  bad(0, 1) = 1.0;
  CHECK_THROWS_AS(eigenvalues(bad), Error);
  CHECK(eigenvalues(HermitianMatrix(0)).empty());
}

TEST_CASE("dense eigenvalues match an independent solver") {
  std::mt19937_64 rng(8);
  std::normal_distribution<double> g;
  for (std::size_t n : {3u, 10u, 40u}) {
    HermitianMatrix h(n);
    for (std::size_t i = 0; i < n; ++i) {
      h(i, i) = g(rng);
      for (std::size_t j = i + 1; j < n; ++j) {
        h(i, j) = {g(rng), g(rng)};
        h(j, i) = std::conj(h(i, j));
      }
    }
    const auto ev = eigenvalues(h);
    const auto ref = eigen_reference(h);
    REQUIRE(ev.size() == n);
    CHECK(std::is_sorted(ev.begin(), ev.end()));
    for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(ev[i] - ref[i]) < 1e-12 * h.frobenius_norm());
    CHECK(std::accumulate(ev.begin(), ev.end(), 0.0) == doctest::Approx(h.trace().real()).epsilon(1e-12));
  }
}

TEST_CASE("finite tube sites and bonds") {
  const auto arm = tube::tube_symmetry(ChiralityVector(4, -2, -2));
  CHECK(build_finite_tube(arm, 1).size() == 8);
  CHECK(build_finite_tube(arm, 6).size() == 48);
  const auto zz = tube::tube_symmetry(ChiralityVector(5, 0, -5));
  CHECK(build_finite_tube(zz, 2).size() == 40);
  const auto ch = tube::tube_symmetry(ChiralityVector(4, -1, -3));
  CHECK(build_finite_tube(ch, 4).size() == 208);

  for (const auto* sym : {&arm, &zz, &ch}) {
    const auto t = build_finite_tube(*sym, 3);
    CHECK(t.size() == std::size_t(2 * sym->q * 3));
    for (std::size_t i = 0; i < t.size(); ++i) {
      CHECK(t.index_of(t.sites[i]) == i);
      std::vector<std::size_t> targets;
      for (const auto& bond : t.bonds[i]) {
        targets.push_back(bond.target);
        CHECK(bond.target != i);
        // Bonds are mutual and carry the same label.
        const auto& back = t.bonds[bond.target];
        CHECK(std::any_of(back.begin(), back.end(),
                          [&](const Bond& x) { return x.target == i && x.label == bond.label; }));
        CHECK(bond.nu == honeycomb::nu(t.sites[i]));
      }
      std::sort(targets.begin(), targets.end());
      CHECK(std::adjacent_find(targets.begin(), targets.end()) == targets.end());
    }
  }
  CHECK_THROWS_AS(build_finite_tube(arm, 0), Error);
}

TEST_CASE("hamiltonian structure") {
  const auto sym = tube::tube_symmetry(ChiralityVector(5, 0, -5));
  const auto t = build_finite_tube(sym, 2);
  const auto uniform = build_hamiltonian(t, BandParams::uniform(1.5, a, 0.3));
  CHECK(uniform.is_hermitian());
  CHECK(uniform.is_real());
  for (std::size_t i = 0; i < uniform.dim(); ++i) {
    double row = 0;
    for (std::size_t j = 0; j < uniform.dim(); ++j) row += std::abs(uniform(i, j));
    CHECK(row == doctest::Approx(0.3 + 3 * 1.5));
  }
  const auto mag = build_hamiltonian(t, bands::magnetic_params(1.0, 0.05, sym.c, a));
  CHECK(mag.is_hermitian());
  CHECK_FALSE(mag.is_real());
}

TEST_CASE("analytic spectrum") {
  const auto sym = tube::tube_symmetry(ChiralityVector(4, -2, -2));
  const auto s = analytic_spectrum(sym, 6, BandParams::uniform(1.0, a));
  REQUIRE(s.size() == 48);
  CHECK(std::is_sorted(s.begin(), s.end()));
  for (std::size_t i = 0; i < s.size(); ++i) CHECK(s[i] == doctest::Approx(-s[s.size() - 1 - i]).scale(1.0));
  CHECK(s.front() == doctest::Approx(-3.0));
  CHECK(s.back() == doctest::Approx(3.0));
}

TEST_CASE("finite spectrum equals the zone-folded spectrum") {
  const auto uniform = BandParams::uniform(1.0, a);
  for (const auto& raw : {IntTriple{4, -2, -2}, IntTriple{5, 0, -5}, IntTriple{3, 0, -3}, IntTriple{3, -1, -2}}) {
    const auto sym = tube::tube_symmetry(ChiralityVector(raw));
    for (std::int64_t P : {2, 3}) {
      const auto r = compare_spectra(sym, P, uniform, 1e-8);
      CHECK(r.pass);
      CHECK(r.finite.size() == std::size_t(2 * sym.q * P));
      CHECK(r.max_deviation < 1e-10);
    }
  }
  const auto sym = tube::tube_symmetry(ChiralityVector(5, 0, -5));
  const double beta = 0.3 / (a * std::sqrt(double(sym.c_norm2)));
  const auto r = compare_spectra(sym, 3, bands::magnetic_params(1.0, beta, sym.c, a), 1e-8);
  CHECK(r.pass);

  // A wrong spectrum is detected.
  auto off = uniform;
  off.epsilon = 1e-6;
  const auto finite = eigenvalues(build_hamiltonian(build_finite_tube(sym, 2), off));
  const auto analytic = analytic_spectrum(sym, 2, uniform);
  double dev = 0;
  for (std::size_t i = 0; i < finite.size(); ++i) dev = std::max(dev, std::abs(finite[i] - analytic[i]));
  CHECK(dev > 1e-8);
}

TEST_CASE("finite spectrum gap brackets the band gap") {
  const auto sym = tube::tube_symmetry(ChiralityVector(5, 0, -5));
  const auto p = BandParams::uniform(1.0, a);
  const auto s = analytic_spectrum(sym, 4, p);
  double smallest = 1e300;
  for (double e : s) smallest = std::min(smallest, std::abs(e));
  CHECK(2 * smallest >= bands::band_gap(sym, p).gap - 1e-12);
}
