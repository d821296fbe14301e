#include "cnt/hermitian.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cnt/error.hpp"

namespace cnt {

bool HermitianMatrix::is_hermitian() const {
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i; j < n_; ++j) {
      if ((*this)(i, j) != std::conj((*this)(j, i))) return false;
    }
  }
  return true;
}

bool HermitianMatrix::is_real() const {
  return std::all_of(a_.begin(), a_.end(), [](const auto& z) { return z.imag() == 0.0; });
}

double HermitianMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& z : a_) s += std::norm(z);
  return std::sqrt(s);
}

std::complex<double> HermitianMatrix::trace() const {
  std::complex<double> t{0.0, 0.0};
  for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

std::vector<double> eigenvalues(const HermitianMatrix& h, const JacobiOptions& opts) {
  const std::size_t n = h.dim();
  if (n > kMaxDenseDim) throw Error(ErrorCode::InvalidArgument, "matrix too large for the dense solver");
  if (!h.is_hermitian()) throw Error(ErrorCode::InvalidArgument, "matrix is not Hermitian");

  HermitianMatrix a = h;
  const double scale = a.frobenius_norm();
  const double target = opts.threshold * scale;
  // Entries below this are left alone; N^2 of them still sum below target.
  const double skip = n > 0 ? target / double(n) : 0.0;

  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
  };

  bool converged = scale == 0.0 || off_norm() <= target;
  for (int sweep = 0; sweep < opts.max_sweeps && !converged; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const std::complex<double> apq = a(p, q);
        const double r = std::abs(apq);
        if (r <= skip) continue;

        // Phase D = diag(1, e^{-i phi}) makes the pivot real, then a real
        // rotation [[c, s], [-s, c]] annihilates it. G = D R.
        const std::complex<double> phase = apq / r;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * r);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const std::complex<double> gqp = -s * std::conj(phase);
        const std::complex<double> gqq = c * std::conj(phase);

        for (std::size_t k = 0; k < n; ++k) {  // A <- A G
          const std::complex<double> akp = a(k, p);
          const std::complex<double> akq = a(k, q);
          a(k, p) = c * akp + gqp * akq;
          a(k, q) = s * akp + gqq * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {  // A <- G^H A
          const std::complex<double> apk = a(p, k);
          const std::complex<double> aqk = a(q, k);
          a(p, k) = c * apk + std::conj(gqp) * aqk;
          a(q, k) = s * apk + std::conj(gqq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
    }
    converged = off_norm() <= target;
  }
  if (!converged) {
    throw Error(ErrorCode::NonConvergence,
                "Jacobi iteration did not converge in " + std::to_string(opts.max_sweeps) + " sweeps");
  }

  std::vector<double> ev(n);
  for (std::size_t i = 0; i < n; ++i) ev[i] = a(i, i).real();
  std::sort(ev.begin(), ev.end());
  return ev;
}

}  // namespace cnt
