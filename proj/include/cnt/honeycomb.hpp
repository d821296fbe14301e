#pragma once

// Honeycomb lattice as integer triples with coordinate sum 0 or 1.
//
// Sum 0 is the triangular sublattice T, sum 1 is T + theta with
// theta = (1,0,0). The graph metric is the l1 distance of the triples.

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "cnt/triple.hpp"

namespace cnt {

/// Integer triple with zero sum; a lattice translation.
class TranslationVector {
 public:
  constexpr TranslationVector() = default;
  TranslationVector(std::int64_t t0, std::int64_t t1, std::int64_t t2);
  explicit TranslationVector(const IntTriple& t);

  const IntTriple& coords() const { return t_; }
  std::int64_t operator[](int i) const { return t_[i]; }

  friend TranslationVector operator+(const TranslationVector& a, const TranslationVector& b) {
    return TranslationVector(a.t_ + b.t_);
  }
  friend TranslationVector operator-(const TranslationVector& a, const TranslationVector& b) {
    return TranslationVector(a.t_ - b.t_);
  }
  friend TranslationVector operator-(const TranslationVector& a) { return TranslationVector(-a.t_); }
  friend TranslationVector operator*(std::int64_t s, const TranslationVector& a) {
    return TranslationVector(s * a.t_);
  }
  friend bool operator==(const TranslationVector&, const TranslationVector&) = default;
  friend auto operator<=>(const TranslationVector&, const TranslationVector&) = default;

 private:
  IntTriple t_{};
};

/// Atom position: integer triple with v0 + v1 + v2 in {0, 1}.
class LatticeSite {
 public:
  constexpr LatticeSite() = default;
  LatticeSite(std::int64_t v0, std::int64_t v1, std::int64_t v2);
  explicit LatticeSite(const IntTriple& v);

  static std::optional<LatticeSite> try_make(const IntTriple& v);
  static bool is_valid(const IntTriple& v) { return v.sum() == 0 || v.sum() == 1; }

  const IntTriple& coords() const { return v_; }
  std::int64_t operator[](int i) const { return v_[i]; }

  /// 0 on T, 1 on T + theta.
  int sublattice() const { return static_cast<int>(v_.sum()); }

  friend LatticeSite operator+(const LatticeSite& v, const TranslationVector& t) {
    return LatticeSite(v.v_ + t.coords());
  }
  friend LatticeSite operator-(const LatticeSite& v, const TranslationVector& t) {
    return LatticeSite(v.v_ - t.coords());
  }
  friend bool operator==(const LatticeSite&, const LatticeSite&) = default;
  friend auto operator<=>(const LatticeSite&, const LatticeSite&) = default;
  friend std::ostream& operator<<(std::ostream& os, const LatticeSite& s) { return os << s.v_; }

 private:
  IntTriple v_{};
};

inline const LatticeSite kTheta{1, 0, 0};

namespace honeycomb {

/// +1 on T, -1 on T + theta.
int nu(const LatticeSite& v);

/// v^j: coordinate j shifted by nu(v).
LatticeSite neighbor(const LatticeSite& v, int j);

std::array<LatticeSite, 3> nearest_neighbors(const LatticeSite& v);

/// v^{ij} for i != j, ordered (01, 02, 10, 12, 20, 21).
std::array<LatticeSite, 6> next_nearest_neighbors(const LatticeSite& v);

std::int64_t distance(const LatticeSite& v, const LatticeSite& u);

enum class Generator { Sigma, Rho, Tau };

/// sigma: cyclic shift, rho: swap of the last two coordinates, tau: v -> -v + theta.
LatticeSite apply(Generator g, const LatticeSite& v);

/// A product of generators written as in the usual notation, e.g.
/// sigma^2 tau sigma tau. The map is the composition, so the rightmost
/// generator acts first; the optional translation is added after the word.
struct SymmetryWord {
  std::vector<Generator> generators;
  std::optional<TranslationVector> translation;

  /// Parses the ASCII spelling 's' = sigma, 'r' = rho, 't' = tau,
  /// e.g. "sstst" for sigma^2 tau sigma tau.
  static SymmetryWord parse(std::string_view word);
};

LatticeSite apply_symmetry(const SymmetryWord& w, const LatticeSite& v);

/// Converts a bond length (angstrom) into the scale a that multiplies
/// lattice positions, bond * sqrt(6) / 2.
double bond_length_scale(double bond);

/// All sites within metric distance `radius` of `center`, sorted.
std::vector<LatticeSite> ball(const LatticeSite& center, std::int64_t radius);

}  // namespace honeycomb
}  // namespace cnt
