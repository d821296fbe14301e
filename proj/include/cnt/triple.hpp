#pragma once

#include <array>
#include <cstdint>
#include <ostream>

namespace cnt {

/// Fixed-size coordinate triple in the three-axes description.
template <typename T>
struct Triple {
  std::array<T, 3> v{};

  constexpr Triple() = default;
  constexpr Triple(T a, T b, T c) : v{a, b, c} {}

  constexpr T& operator[](int i) { return v[static_cast<std::size_t>(i)]; }
  constexpr const T& operator[](int i) const { return v[static_cast<std::size_t>(i)]; }

  constexpr T sum() const { return v[0] + v[1] + v[2]; }

  constexpr Triple& operator+=(const Triple& o) {
    for (int i = 0; i < 3; ++i) (*this)[i] += o[i];
    return *this;
  }
  constexpr Triple& operator-=(const Triple& o) {
    for (int i = 0; i < 3; ++i) (*this)[i] -= o[i];
    return *this;
  }

  friend constexpr Triple operator+(Triple a, const Triple& b) { return a += b; }
  friend constexpr Triple operator-(Triple a, const Triple& b) { return a -= b; }
  friend constexpr Triple operator-(const Triple& a) { return Triple{-a[0], -a[1], -a[2]}; }
  friend constexpr Triple operator*(T s, const Triple& a) { return Triple{s * a[0], s * a[1], s * a[2]}; }
  friend constexpr bool operator==(const Triple&, const Triple&) = default;
  friend constexpr auto operator<=>(const Triple&, const Triple&) = default;

  friend std::ostream& operator<<(std::ostream& os, const Triple& t) {
    return os << '(' << t[0] << ',' << t[1] << ',' << t[2] << ')';
  }
};

using IntTriple = Triple<std::int64_t>;
using RealTriple = Triple<double>;

inline RealTriple to_real(const IntTriple& t) {
  return {static_cast<double>(t[0]), static_cast<double>(t[1]), static_cast<double>(t[2])};
}

/// Plain coordinate dot product; equals the geometric scalar product when
/// either argument has zero coordinate sum.
template <typename T>
constexpr T dot(const Triple<T>& a, const Triple<T>& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

}  // namespace cnt
