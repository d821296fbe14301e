#pragma once

// Single-wall nanotube as the factor space L_c = L / Zc.
//
// A chirality c is a lattice translation; sites differing by a multiple of c
// are the same atom of the rolled tube. Classes are stored through a
// canonical representative whose projection on c lies in [0, ||c||^2).

#include <array>
#include <complex>
#include <string_view>

#include "cnt/config.hpp"
#include "cnt/honeycomb.hpp"

namespace cnt {

/// Zero-sum integer triple with c0 > c1 >= c2.
class ChiralityVector {
 public:
  /// Throws Error with ZeroChirality, NonzeroSum or OrderingViolation.
  ChiralityVector(std::int64_t c0, std::int64_t c1, std::int64_t c2);
  explicit ChiralityVector(const IntTriple& c);

  const IntTriple& coords() const { return c_; }
  std::int64_t operator[](int i) const { return c_[i]; }
  TranslationVector translation() const { return TranslationVector(c_); }

  friend bool operator==(const ChiralityVector&, const ChiralityVector&) = default;
  friend std::ostream& operator<<(std::ostream& os, const ChiralityVector& c) { return os << c.c_; }

 private:
  IntTriple c_;
};

enum class TubeClass { Armchair, Zigzag, Chiral };

std::string_view to_string(TubeClass k);

namespace tube {

ChiralityVector validate_chirality(const IntTriple& raw);

/// Maps a nonzero zero-sum triple into the c0 > c1 >= c2 domain using the
/// twelve signed coordinate permutations; the lexicographically largest
/// image wins when several qualify.
ChiralityVector canonicalize_chirality(const IntTriple& raw);

TubeClass classify(const ChiralityVector& c);

}  // namespace tube

/// Symmetry data derived from a chirality.
struct TubeSymmetry {
  ChiralityVector c{1, 0, -1};
  std::int64_t n = 0;            // gcd of the components of c
  TranslationVector c_prime;     // c / n, generator of the rotation by 2pi/n
  std::int64_t R = 0;            // gcd(c1-c2, c2-c0, c0-c1)
  TranslationVector b;           // shortest pure translation along the axis
  std::int64_t q = 0;            // ||c||^2 / R, hexagons per translational cell
  std::int64_t q_prime = 0;      // q / n
  TranslationVector omega;       // screw generator, <omega,b> = ||b||^2/q'
  double delta = 0.0;            // spacing of the allowed k-lines, 2pi/(a||c||)
  double a = kDefaultScale;      // length scale used for delta
  std::int64_t c_norm2 = 0;
  std::int64_t b_norm2 = 0;
  std::int64_t screw_offset = 0;  // h with q' omega = b + h c'
};

namespace tube {

TubeSymmetry tube_symmetry(const ChiralityVector& c, double a = kDefaultScale);

/// Diameter in angstrom, ||c|| a / pi.
double diameter(const ChiralityVector& c, double a = kDefaultScale);

}  // namespace tube

/// Equivalence class [v] = v + Zc, held by its canonical representative.
struct NodeClass {
  LatticeSite rep;
  ChiralityVector chirality;
  friend bool operator==(const NodeClass&, const NodeClass&) = default;
};

/// Unique (s, m, p) with [v] = tau^p g_omega^s g_c'^m [0,0,0].
struct SymmetryDecomposition {
  std::int64_t s = 0;
  std::int64_t m = 0;
  int p = 0;
  friend bool operator==(const SymmetryDecomposition&, const SymmetryDecomposition&) = default;
};

enum class TubeGenerator { Rotation, Screw };  // g_c' and g_omega

namespace tube {

/// Floor division for signed integers.
std::int64_t floor_div(std::int64_t num, std::int64_t den);

NodeClass canonical_rep(const LatticeSite& v, const ChiralityVector& c);

/// Applies an integer translation to a class, g_w[v] = [v + w].
NodeClass translate(const NodeClass& nc, const TranslationVector& w);

/// tau[v] = [-v + theta].
NodeClass invert(const NodeClass& nc);

std::array<NodeClass, 3> class_neighbors(const NodeClass& nc);
std::array<NodeClass, 6> class_next_nearest(const NodeClass& nc);

SymmetryDecomposition decompose(const NodeClass& nc, const TubeSymmetry& sym);
NodeClass compose(const SymmetryDecomposition& d, const TubeSymmetry& sym);

/// One-dimensional irrep (kappa, m) of the group generated by g_c' and g_omega.
std::complex<double> irrep_character(std::int64_t m, double kappa, const TubeSymmetry& sym,
                                     double a, TubeGenerator g);

}  // namespace tube
}  // namespace cnt
