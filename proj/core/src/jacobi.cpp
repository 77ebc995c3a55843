#include <algorithm>
#include <cmath>
#include <functional>

#include "shuffle_spectra/chain.hpp"
#include "shuffle_spectra/errors.hpp"

namespace shuffle_spectra {

namespace {

double max_off_diagonal(const DenseMatrix<double>& a) {
  double out = 0.0;
  for (std::size_t p = 0; p < a.dim; ++p) {
    for (std::size_t q = p + 1; q < a.dim; ++q) out = std::max(out, std::fabs(a(p, q)));
  }
  return out;
}

void rotate(DenseMatrix<double>& a, std::size_t p, std::size_t q) {
  const double apq = a(p, q);
  const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;
  const double tau = s / (1.0 + c);
  const std::size_t n = a.dim;
  double* row_p = a.data.data() + p * n;
  double* row_q = a.data.data() + q * n;
  for (std::size_t r = 0; r < n; ++r) {
    if (r == p || r == q) continue;
    const double arp = row_p[r];
    const double arq = row_q[r];
    row_p[r] = arp - s * (arq + tau * arp);
    row_q[r] = arq + s * (arp - tau * arq);
  }
  row_p[p] -= t * apq;
  row_q[q] += t * apq;
  row_p[q] = 0.0;
  row_q[p] = 0.0;
  for (std::size_t r = 0; r < n; ++r) {
    if (r == p || r == q) continue;
    a(r, p) = row_p[r];
    a(r, q) = row_q[r];
  }
}

}  // namespace

std::vector<double> jacobi_eigenvalues(DenseMatrix<double> matrix, double tol, int max_sweeps) {
  if (matrix.data.size() != matrix.dim * matrix.dim) throw DomainError("jacobi_eigenvalues: malformed matrix");
  const std::size_t n = matrix.dim;
  int sweep = 0;
  const double skip = tol / static_cast<double>(std::max<std::size_t>(n, 1));
  while (max_off_diagonal(matrix) >= tol) {
    if (sweep++ >= max_sweeps) {
      throw NumericError("jacobi_eigenvalues: no convergence after " + std::to_string(max_sweeps) + " sweeps");
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::fabs(matrix(p, q)) >= skip) rotate(matrix, p, q);
      }
    }
  }
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = matrix(i, i);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

}  // namespace shuffle_spectra
