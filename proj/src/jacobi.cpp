#include "gel/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "gel/error.hpp"

namespace gel {

namespace {

double off_diagonal_norm(const std::vector<double>& a, std::size_t n) {
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) sum += a[i * n + j] * a[i * n + j];
  }
  return std::sqrt(2.0 * sum);
}

// Zeroes a(p,q) with a plane rotation applied on both sides.
void rotate(std::vector<double>& a, std::size_t n, std::size_t p, std::size_t q) {
  const double apq = a[p * n + q];
  const double app = a[p * n + p];
  const double aqq = a[q * n + q];
  const double theta = (aqq - app) / (2.0 * apq);
  const double t = (theta >= 0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  for (std::size_t r = 0; r < n; ++r) {
    if (r == p || r == q) continue;
    const double arp = a[r * n + p];
    const double arq = a[r * n + q];
    const double np = c * arp - s * arq;
    const double nq = s * arp + c * arq;
    a[r * n + p] = a[p * n + r] = np;
    a[r * n + q] = a[q * n + r] = nq;
  }
  a[p * n + p] = app - t * apq;
  a[q * n + q] = aqq + t * apq;
  a[p * n + q] = a[q * n + p] = 0.0;
}

}  // namespace

JacobiResult jacobi_eigenvalues(std::vector<double> a, std::size_t n,
                                const JacobiOptions& options) {
  if (a.size() != n * n) throw Error(ErrorKind::InvalidGraph, "jacobi: matrix size mismatch");
  JacobiResult result;
  const double target = options.tolerance_per_row * static_cast<double>(n);
  double off = off_diagonal_norm(a, n);
  while (off > 0.0 && off >= target) {
    if (result.sweeps == options.max_sweeps) {
      std::ostringstream msg;
      msg << "jacobi: no convergence after " << options.max_sweeps
          << " sweeps (off-diagonal norm " << off << ", target " << target << ")";
      throw Error(ErrorKind::NumericFailure, msg.str());
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        // Entries already negligible relative to both diagonals are left alone.
        const double apq = a[p * n + q];
        if (apq == 0.0) continue;
        const double scale = std::fabs(a[p * n + p]) + std::fabs(a[q * n + q]);
        if (result.sweeps > 3 && scale + std::fabs(apq) * 1e3 == scale) {
          a[p * n + q] = a[q * n + p] = 0.0;
          continue;
        }
        rotate(a, n, p, q);
      }
    }
    ++result.sweeps;
    off = off_diagonal_norm(a, n);
  }
  result.off_norm = off;
  result.eigenvalues.resize(n);
  for (std::size_t i = 0; i < n; ++i) result.eigenvalues[i] = a[i * n + i];
  std::sort(result.eigenvalues.begin(), result.eigenvalues.end(), std::greater<>());
  return result;
}

}  // namespace gel
