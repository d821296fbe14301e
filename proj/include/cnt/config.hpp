#pragma once

#include <cmath>
#include <numbers>

namespace cnt {

/// C-C bond length of a graphene sheet in angstrom.
inline constexpr double kGrapheneBond = 1.44;

/// Length scale that turns lattice positions into angstrom for a given bond.
inline constexpr double kDefaultScale = kGrapheneBond * 2.449489742783178 / 2.0;  // 1.44*sqrt(6)/2

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Shared numerical tolerances.
struct Tolerances {
  double geometry = 1e-12;      // absolute, for triple identities
  double line_condition = 1e-9;  // |<k,c>a/2pi - round| for "k lies on an allowed line"
  double brillouin = 1e-12;     // relative slack on the closed zone boundary
  double singular = 1e-12;      // |S(k)| below this counts as a conical point
};

inline const Tolerances& default_tolerances() {
  static const Tolerances t{};
  return t;
}

}  // namespace cnt
