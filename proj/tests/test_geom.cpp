#include <doctest.h>

#include <cmath>
#include <random>

#include "cnt/error.hpp"
#include "cnt/geom.hpp"

using namespace cnt;
using namespace cnt::geom;

TEST_CASE("canonical coordinates of basic vectors") {
  const double s6 = std::sqrt(6.0), s2 = std::sqrt(2.0);
  CHECK(canonical_coords({0, 0}) == RealTriple{0, 0, 0});

  const auto x = canonical_coords({1, 0});
  CHECK(x[0] == doctest::Approx(2 / s6).epsilon(1e-15));
  CHECK(x[1] == doctest::Approx(-1 / s6).epsilon(1e-15));
  CHECK(x[2] == doctest::Approx(-1 / s6).epsilon(1e-15));
  CHECK(x[0] == doctest::Approx(0.816497).epsilon(1e-6));

  const auto y = canonical_coords({0, 1});
  CHECK(std::abs(y[0]) < 1e-15);
  CHECK(y[1] == doctest::Approx(1 / s2));
  CHECK(y[2] == doctest::Approx(-1 / s2));
}

TEST_CASE("embed") {
  CHECK(embed(RealTriple{0, 0, 0}) == PlaneVector{0, 0});
  const auto e0 = embed(IntTriple{1, 0, 0});
  CHECK(e0.x == doctest::Approx(2 / std::sqrt(6.0)));
  CHECK(e0.y == 0.0);
  const auto z = embed(IntTriple{1, 1, 1});
  CHECK(std::abs(z.x) < 1e-15);
  CHECK(std::abs(z.y) < 1e-15);
}

TEST_CASE("inner product in triple form") {
  CHECK(inner(RealTriple{1, -1, 0}, RealTriple{1, -1, 0}) == doctest::Approx(2.0));
  CHECK(inner(RealTriple{1, 0, 0}, RealTriple{1, 0, 0}) == doctest::Approx(2.0 / 3.0));
  CHECK(std::abs(inner(RealTriple{1, 1, 1}, RealTriple{0.3, -1.1, 0.8})) < 1e-15);

  CHECK(inner(IntTriple{4, -2, -2}, IntTriple{5, -2, -2}) == 28);
  CHECK_THROWS_AS(inner(IntTriple{1, 0, 0}, IntTriple{0, 1, 0}), Error);

  // Matches the Euclidean product of the embedded points for arbitrary triples.
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> d(-3, 3);
  for (int i = 0; i < 200; ++i) {
    const RealTriple u{d(rng), d(rng), d(rng)};
    const RealTriple v{d(rng), d(rng), d(rng)};
    CHECK(inner(u, v) == doctest::Approx(dot(embed(u), embed(v))).epsilon(1e-12));
  }
}

TEST_CASE("coherence identities and round trip (property)") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> d(-10, 10);
  const auto& e = triad();
  for (int i = 0; i < 500; ++i) {
    const PlaneVector v{d(rng), d(rng)};
    const PlaneVector u{d(rng), d(rng)};
    const auto cv = canonical_coords(v);
    const auto cu = canonical_coords(u);
    CHECK(std::abs(cv.sum()) < 1e-12);

    PlaneVector rebuilt;
    for (int j = 0; j < 3; ++j) {
      rebuilt.x += cv[j] * e[std::size_t(j)].x;
      rebuilt.y += cv[j] * e[std::size_t(j)].y;
    }
    CHECK(std::abs(rebuilt.x - v.x) < 1e-12);
    CHECK(std::abs(rebuilt.y - v.y) < 1e-12);
    CHECK(std::abs(cnt::dot(cv, cu) - dot(v, u)) < 1e-12 * std::max(1.0, std::abs(dot(v, u))));
    CHECK(std::abs(cnt::dot(cv, cv) - dot(v, v)) < 1e-12 * std::max(1.0, dot(v, v)));

    // canonical_coords(embed(t)) = t for zero-sum t.
    const RealTriple t = canonicalize(RealTriple{d(rng), d(rng), d(rng)});
    const auto back = canonical_coords(embed(t));
    for (int j = 0; j < 3; ++j) CHECK(std::abs(back[j] - t[j]) < 1e-12);

    // Shift invariance of the first argument.
    const double alpha = d(rng);
    const RealTriple shifted = t + RealTriple{alpha, alpha, alpha};
    CHECK(std::abs(inner(shifted, cu) - inner(t, cu)) < 1e-12 * std::max(1.0, std::abs(inner(t, cu))));
  }
}
