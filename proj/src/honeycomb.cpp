#include "cnt/honeycomb.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <sstream>

#include "cnt/error.hpp"

namespace cnt {

TranslationVector::TranslationVector(std::int64_t t0, std::int64_t t1, std::int64_t t2)
    : TranslationVector(IntTriple{t0, t1, t2}) {}

TranslationVector::TranslationVector(const IntTriple& t) : t_(t) {
  if (t.sum() != 0) {
    std::ostringstream os;
    os << "translation " << t << " does not sum to zero";
    throw Error(ErrorCode::NonzeroSum, os.str());
  }
}

LatticeSite::LatticeSite(std::int64_t v0, std::int64_t v1, std::int64_t v2)
    : LatticeSite(IntTriple{v0, v1, v2}) {}

LatticeSite::LatticeSite(const IntTriple& v) : v_(v) {
  if (!is_valid(v)) {
    std::ostringstream os;
    os << "site " << v << " has coordinate sum " << v.sum() << ", expected 0 or 1";
    throw Error(ErrorCode::InvalidSite, os.str());
  }
}

std::optional<LatticeSite> LatticeSite::try_make(const IntTriple& v) {
  if (!is_valid(v)) return std::nullopt;
  return LatticeSite(v);
}

namespace honeycomb {

int nu(const LatticeSite& v) { return v.sublattice() == 0 ? 1 : -1; }

LatticeSite neighbor(const LatticeSite& v, int j) {
  if (j < 0 || j > 2) throw Error(ErrorCode::OutOfRange, "bond index must be 0, 1 or 2");
  IntTriple u = v.coords();
  u[j] += nu(v);
  return LatticeSite(u);
}

std::array<LatticeSite, 3> nearest_neighbors(const LatticeSite& v) {
  return {neighbor(v, 0), neighbor(v, 1), neighbor(v, 2)};
}

std::array<LatticeSite, 6> next_nearest_neighbors(const LatticeSite& v) {
  std::array<LatticeSite, 6> out;
  std::size_t k = 0;
  for (int i = 0; i < 3; ++i) {
    const LatticeSite vi = neighbor(v, i);
    for (int j = 0; j < 3; ++j) {
      if (i != j) out[k++] = neighbor(vi, j);
    }
  }
  return out;
}

std::int64_t distance(const LatticeSite& v, const LatticeSite& u) {
  return std::abs(v[0] - u[0]) + std::abs(v[1] - u[1]) + std::abs(v[2] - u[2]);
}

LatticeSite apply(Generator g, const LatticeSite& v) {
  switch (g) {
    case Generator::Sigma: return LatticeSite(v[1], v[2], v[0]);
    case Generator::Rho: return LatticeSite(v[0], v[2], v[1]);
    case Generator::Tau: return LatticeSite(1 - v[0], -v[1], -v[2]);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown generator");
}

SymmetryWord SymmetryWord::parse(std::string_view word) {
  SymmetryWord w;
  for (char ch : word) {
    switch (ch) {
      case 's': w.generators.push_back(Generator::Sigma); break;
      case 'r': w.generators.push_back(Generator::Rho); break;
      case 't': w.generators.push_back(Generator::Tau); break;
      default:
        throw Error(ErrorCode::InvalidArgument,
                    std::string("unknown generator letter '") + ch + "' (use s, r, t)");
    }
  }
  return w;
}

LatticeSite apply_symmetry(const SymmetryWord& w, const LatticeSite& v) {
  LatticeSite out = v;
  for (auto it = w.generators.rbegin(); it != w.generators.rend(); ++it) out = apply(*it, out);
  if (w.translation) out = out + *w.translation;
  return out;
}

double bond_length_scale(double bond) {
  if (!(bond > 0.0) || !std::isfinite(bond)) {
    throw Error(ErrorCode::InvalidArgument, "bond length must be positive");
  }
  return bond * std::sqrt(6.0) / 2.0;
}

std::vector<LatticeSite> ball(const LatticeSite& center, std::int64_t radius) {
  std::vector<LatticeSite> out;
  for (std::int64_t d0 = -radius; d0 <= radius; ++d0) {
    for (std::int64_t d1 = -radius; d1 <= radius; ++d1) {
      for (std::int64_t d2 = -radius; d2 <= radius; ++d2) {
        if (std::abs(d0) + std::abs(d1) + std::abs(d2) > radius) continue;
        const IntTriple t = center.coords() + IntTriple{d0, d1, d2};
        if (LatticeSite::is_valid(t)) out.emplace_back(t);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace honeycomb
}  // namespace cnt
