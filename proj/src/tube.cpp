#include "cnt/tube.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <sstream>

#include "cnt/error.hpp"
#include "cnt/geom.hpp"

namespace cnt {

namespace {

std::string describe(const IntTriple& t) {
  std::ostringstream os;
  os << t;
  return os.str();
}

std::int64_t gcd3(std::int64_t x, std::int64_t y, std::int64_t z) {
  return std::gcd(std::gcd(std::abs(x), std::abs(y)), std::abs(z));
}

// Integer t with r = t * unit, or nullopt if r is not such a multiple.
std::optional<std::int64_t> multiple_of(const IntTriple& r, const IntTriple& unit) {
  int pivot = 0;
  while (pivot < 3 && unit[pivot] == 0) ++pivot;
  if (pivot == 3) return std::nullopt;
  if (r[pivot] % unit[pivot] != 0) return std::nullopt;
  const std::int64_t t = r[pivot] / unit[pivot];
  if (r != t * unit) return std::nullopt;
  return t;
}

}  // namespace

ChiralityVector::ChiralityVector(std::int64_t c0, std::int64_t c1, std::int64_t c2)
    : ChiralityVector(IntTriple{c0, c1, c2}) {}

ChiralityVector::ChiralityVector(const IntTriple& c) : c_(c) {
  if (c == IntTriple{0, 0, 0}) throw Error(ErrorCode::ZeroChirality, "chirality must be nonzero");
  if (c.sum() != 0) {
    throw Error(ErrorCode::NonzeroSum, "chirality " + describe(c) + " does not sum to zero");
  }
  if (!(c[0] > c[1] && c[1] >= c[2])) {
    throw Error(ErrorCode::OrderingViolation,
                "chirality " + describe(c) + " violates c0 > c1 >= c2");
  }
}

std::string_view to_string(TubeClass k) {
  switch (k) {
    case TubeClass::Armchair: return "armchair";
    case TubeClass::Zigzag: return "zigzag";
    case TubeClass::Chiral: return "chiral";
  }
  return "unknown";
}

namespace tube {

ChiralityVector validate_chirality(const IntTriple& raw) { return ChiralityVector(raw); }

ChiralityVector canonicalize_chirality(const IntTriple& raw) {
  if (raw == IntTriple{0, 0, 0}) throw Error(ErrorCode::ZeroChirality, "chirality must be nonzero");
  if (raw.sum() != 0) {
    throw Error(ErrorCode::NonzeroSum, "chirality " + describe(raw) + " does not sum to zero");
  }
  std::array<int, 3> perm{0, 1, 2};
  std::optional<IntTriple> best;
  do {
    for (std::int64_t sign : {1, -1}) {
      const IntTriple img{sign * raw[perm[0]], sign * raw[perm[1]], sign * raw[perm[2]]};
      if (img[0] > img[1] && img[1] >= img[2] && (!best || img > *best)) best = img;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  // Sorting descending always yields c0 >= c1 >= c2; c0 == c1 forces the
  // negated sort to have strict first inequality, so an image always exists.
  if (!best) throw Error(ErrorCode::InvariantViolation, "no image of " + describe(raw) + " in domain");
  return ChiralityVector(*best);
}

TubeClass classify(const ChiralityVector& c) {
  if (c[1] == c[2]) return TubeClass::Armchair;
  if (c[1] == 0) return TubeClass::Zigzag;
  return TubeClass::Chiral;
}

TubeSymmetry tube_symmetry(const ChiralityVector& c, double a) {
  if (!(a > 0.0)) throw Error(ErrorCode::InvalidArgument, "length scale a must be positive");
  TubeSymmetry s;
  s.c = c;
  s.a = a;
  s.n = gcd3(c[0], c[1], c[2]);
  s.c_prime = TranslationVector(c[0] / s.n, c[1] / s.n, c[2] / s.n);

  const IntTriple w{c[1] - c[2], c[2] - c[0], c[0] - c[1]};
  s.R = gcd3(w[0], w[1], w[2]);
  s.b = TranslationVector(w[0] / s.R, w[1] / s.R, w[2] / s.R);

  s.c_norm2 = geom::norm2(c.coords());
  s.b_norm2 = geom::norm2(s.b.coords());
  if (s.c_norm2 % s.R != 0) throw Error(ErrorCode::InvariantViolation, "||c||^2 not divisible by R");
  s.q = s.c_norm2 / s.R;
  if (s.q % s.n != 0) throw Error(ErrorCode::InvariantViolation, "q not a multiple of n");
  s.q_prime = s.q / s.n;
  if (s.b_norm2 % s.q_prime != 0) {
    throw Error(ErrorCode::InvariantViolation, "||b||^2 not divisible by q'");
  }
  const std::int64_t target = s.b_norm2 / s.q_prime;

  // Shell search by max-norm radius. A zero-sum vector of max-norm r has
  // squared norm at least r^2, so once the best norm is below (r+1)^2 no
  // larger shell can tie or improve.
  const auto bound = static_cast<std::int64_t>(std::ceil(std::sqrt(double(s.b_norm2)) * double(s.q)));
  std::optional<IntTriple> best;
  std::int64_t best_norm2 = 0;
  for (std::int64_t r = 1; r <= bound; ++r) {
    for (std::int64_t x = -r; x <= r; ++x) {
      for (std::int64_t y = -r; y <= r; ++y) {
        const std::int64_t z = -x - y;
        if (std::max({std::abs(x), std::abs(y), std::abs(z)}) != r) continue;
        const IntTriple cand{x, y, z};
        if (cnt::dot(cand, s.b.coords()) != target) continue;
        const std::int64_t nn = cnt::dot(cand, cand);
        if (!best || nn < best_norm2 || (nn == best_norm2 && cand < *best)) {
          best = cand;
          best_norm2 = nn;
        }
      }
    }
    if (best && best_norm2 < (r + 1) * (r + 1)) break;
  }
  if (!best) throw Error(ErrorCode::InvariantViolation, "no screw vector found for " + describe(c.coords()));
  s.omega = TranslationVector(*best);

  const IntTriple twist = s.q_prime * s.omega.coords() - s.b.coords();
  const auto h = multiple_of(twist, s.c_prime.coords());
  if (!h) throw Error(ErrorCode::InvariantViolation, "q' omega - b is not a multiple of c'");
  s.screw_offset = *h;

  s.delta = kTwoPi / (a * std::sqrt(double(s.c_norm2)));
  return s;
}

double diameter(const ChiralityVector& c, double a) {
  if (!(a > 0.0)) throw Error(ErrorCode::InvalidArgument, "length scale a must be positive");
  return std::sqrt(double(geom::norm2(c.coords()))) * a / std::numbers::pi;
}

std::int64_t floor_div(std::int64_t num, std::int64_t den) {
  std::int64_t q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return q;
}

NodeClass canonical_rep(const LatticeSite& v, const ChiralityVector& c) {
  const std::int64_t proj = cnt::dot(v.coords(), c.coords());
  const std::int64_t j = floor_div(proj, geom::norm2(c.coords()));
  return NodeClass{v - j * c.translation(), c};
}

NodeClass translate(const NodeClass& nc, const TranslationVector& w) {
  return canonical_rep(nc.rep + w, nc.chirality);
}

NodeClass invert(const NodeClass& nc) {
  return canonical_rep(honeycomb::apply(honeycomb::Generator::Tau, nc.rep), nc.chirality);
}

std::array<NodeClass, 3> class_neighbors(const NodeClass& nc) {
  std::array<NodeClass, 3> out{nc, nc, nc};
  for (int j = 0; j < 3; ++j) {
    out[static_cast<std::size_t>(j)] = canonical_rep(honeycomb::neighbor(nc.rep, j), nc.chirality);
  }
  return out;
}

std::array<NodeClass, 6> class_next_nearest(const NodeClass& nc) {
  const auto sites = honeycomb::next_nearest_neighbors(nc.rep);
  std::array<NodeClass, 6> out{nc, nc, nc, nc, nc, nc};
  for (std::size_t i = 0; i < 6; ++i) out[i] = canonical_rep(sites[i], nc.chirality);
  return out;
}

SymmetryDecomposition decompose(const NodeClass& nc, const TubeSymmetry& sym) {
  if (!(nc.chirality == sym.c)) {
    throw Error(ErrorCode::InvalidArgument, "class and symmetry data refer to different chiralities");
  }
  SymmetryDecomposition d;
  d.p = nc.rep.sublattice();
  const IntTriple w = d.p == 0 ? nc.rep.coords()
                               : honeycomb::apply(honeycomb::Generator::Tau, nc.rep).coords();

  const std::int64_t step = sym.b_norm2 / sym.q_prime;  // <omega, b>
  const std::int64_t proj = cnt::dot(w, sym.b.coords());
  if (proj % step != 0) {
    throw Error(ErrorCode::InvariantViolation, "axial coordinate of " + describe(w) + " is not integral");
  }
  d.s = proj / step;

  const IntTriple residual = w - d.s * sym.omega.coords();
  const auto t = multiple_of(residual, sym.c_prime.coords());
  if (!t) {
    throw Error(ErrorCode::InvariantViolation, "residual " + describe(residual) + " not parallel to c'");
  }
  d.m = ((*t % sym.n) + sym.n) % sym.n;
  return d;
}

NodeClass compose(const SymmetryDecomposition& d, const TubeSymmetry& sym) {
  if (d.m < 0 || d.m >= sym.n) throw Error(ErrorCode::OutOfRange, "m must lie in [0, n)");
  if (d.p != 0 && d.p != 1) throw Error(ErrorCode::OutOfRange, "p must be 0 or 1");
  const IntTriple x = d.s * sym.omega.coords() + d.m * sym.c_prime.coords();
  const LatticeSite site(x);
  const LatticeSite v = d.p == 0 ? site : honeycomb::apply(honeycomb::Generator::Tau, site);
  return canonical_rep(v, sym.c);
}

std::complex<double> irrep_character(std::int64_t m, double kappa, const TubeSymmetry& sym, double a,
                                     TubeGenerator g) {
  if (m < 0 || m >= sym.n) throw Error(ErrorCode::OutOfRange, "m must lie in [0, n)");
  if (!(a > 0.0)) throw Error(ErrorCode::InvalidArgument, "length scale a must be positive");
  const double kappa_max = kTwoPi * double(sym.q_prime) / a;
  if (!(kappa >= 0.0 && kappa < kappa_max)) {
    throw Error(ErrorCode::OutOfRange, "kappa must lie in [0, 2 pi q'/a)");
  }
  const double phase = g == TubeGenerator::Rotation ? -kTwoPi * double(m) / double(sym.n)
                                                    : -kappa * a / double(sym.q_prime);
  return std::polar(1.0, phase);
}

}  // namespace tube
}  // namespace cnt
