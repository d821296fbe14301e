#include "cnt/geom.hpp"

#include <cmath>

#include "cnt/error.hpp"

namespace cnt {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroChirality: return "zero-chirality";
    case ErrorCode::NonzeroSum: return "nonzero-sum";
    case ErrorCode::OrderingViolation: return "ordering-violation";
    case ErrorCode::InvalidSite: return "invalid-site";
    case ErrorCode::InvalidArgument: return "invalid-argument";
    case ErrorCode::OutOfRange: return "out-of-range";
    case ErrorCode::SingularPoint: return "singular-point";
    case ErrorCode::InvariantViolation: return "invariant-violation";
    case ErrorCode::NonConvergence: return "non-convergence";
  }
  return "unknown";
}

}  // namespace cnt

namespace cnt::geom {

const std::array<PlaneVector, 3>& triad() {
  static const std::array<PlaneVector, 3> e = {
      PlaneVector{2.0 / std::sqrt(6.0), 0.0},
      PlaneVector{-1.0 / std::sqrt(6.0), 1.0 / std::sqrt(2.0)},
      PlaneVector{-1.0 / std::sqrt(6.0), -1.0 / std::sqrt(2.0)},
  };
  return e;
}

double dot(const PlaneVector& a, const PlaneVector& b) { return a.x * b.x + a.y * b.y; }

CanonicalTriple canonical_coords(const PlaneVector& v) {
  const auto& e = triad();
  return {dot(v, e[0]), dot(v, e[1]), dot(v, e[2])};
}

PlaneVector embed(const RealTriple& u) {
  const auto& e = triad();
  PlaneVector p;
  for (int i = 0; i < 3; ++i) {
    p.x += u[i] * e[static_cast<std::size_t>(i)].x;
    p.y += u[i] * e[static_cast<std::size_t>(i)].y;
  }
  return p;
}

PlaneVector embed(const IntTriple& u) { return embed(to_real(u)); }

CanonicalTriple canonicalize(const RealTriple& u) {
  const double mean = u.sum() / 3.0;
  return {u[0] - mean, u[1] - mean, u[2] - mean};
}

double inner(const RealTriple& u, const RealTriple& v) {
  return cnt::dot(canonicalize(u), v);
}

std::int64_t inner(const IntTriple& u, const IntTriple& v) {
  if (u.sum() != 0 && v.sum() != 0) {
    throw Error(ErrorCode::InvalidArgument, "integer inner product needs a zero-sum argument");
  }
  return cnt::dot(u, v);
}

double norm2(const RealTriple& u) { return inner(u, u); }

std::int64_t norm2(const IntTriple& t) { return inner(t, t); }

bool is_canonical(const RealTriple& u, const Tolerances& tol) {
  return std::abs(u.sum()) <= tol.geometry;
}

}  // namespace cnt::geom
