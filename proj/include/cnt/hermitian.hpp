#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace cnt {

/// Dense complex matrix meant to hold a Hermitian operator, row-major.
class HermitianMatrix {
 public:
  explicit HermitianMatrix(std::size_t n) : n_(n), a_(n * n) {}

  std::size_t dim() const { return n_; }
  std::complex<double>& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const std::complex<double>& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  /// Exact check: H(i,j) == conj(H(j,i)) for all i, j.
  bool is_hermitian() const;
  bool is_real() const;
  double frobenius_norm() const;
  std::complex<double> trace() const;

 private:
  std::size_t n_;
  std::vector<std::complex<double>> a_;
};

struct JacobiOptions {
  double threshold = 1e-14;  // stop when off-diagonal norm <= threshold * ||H||_F
  int max_sweeps = 100;
};

inline constexpr std::size_t kMaxDenseDim = 4096;

/// All eigenvalues in ascending order by cyclic complex Jacobi rotations.
/// Works on a private copy. Throws NonConvergence after max_sweeps.
std::vector<double> eigenvalues(const HermitianMatrix& h, const JacobiOptions& opts = {});

}  // namespace cnt
