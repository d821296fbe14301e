#pragma once

// Three-axes description of the Euclidean plane.
//
// The coherent triad e0, e1, e2 (vertices of an equilateral triangle) gives
// every plane vector the canonical coordinates (<v,e0>, <v,e1>, <v,e2>),
// which always sum to zero. A triple (u0,u1,u2) with any sum still names the
// point sum u_i e_i; adding (a,a,a) does not move it.

#include <array>

#include "cnt/config.hpp"
#include "cnt/triple.hpp"

namespace cnt::geom {

struct PlaneVector {
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(const PlaneVector&, const PlaneVector&) = default;
};

using CanonicalTriple = RealTriple;

/// e0, e1, e2 in Cartesian coordinates.
const std::array<PlaneVector, 3>& triad();

double dot(const PlaneVector& a, const PlaneVector& b);

CanonicalTriple canonical_coords(const PlaneVector& v);

PlaneVector embed(const RealTriple& u);
PlaneVector embed(const IntTriple& u);

/// Removes the component mean, giving the canonical representative.
CanonicalTriple canonicalize(const RealTriple& u);

/// Euclidean scalar product of the embedded points, computed as sum ~u_i v_i.
double inner(const RealTriple& u, const RealTriple& v);

/// Exact integer scalar product. At least one argument must have zero sum.
std::int64_t inner(const IntTriple& u, const IntTriple& v);

double norm2(const RealTriple& u);
std::int64_t norm2(const IntTriple& t);  // t must sum to zero

bool is_canonical(const RealTriple& u, const Tolerances& tol = default_tolerances());

}  // namespace cnt::geom
