#include <cmath>

#include "shuffle_spectra/errors.hpp"
#include "shuffle_spectra/spectrum.hpp"

namespace shuffle_spectra {

namespace {

// (i^k - 1) / ((i - 1) i^{k-1}): the defect of the step that opens row two.
Rational hook_head_exact(long i, int k) {
  BigInt ik;
  mpz_ui_pow_ui(ik.get_mpz_t(), static_cast<unsigned long>(i), static_cast<unsigned long>(k));
  BigInt ik1;
  mpz_ui_pow_ui(ik1.get_mpz_t(), static_cast<unsigned long>(i), static_cast<unsigned long>(k - 1));
  Rational out(ik - 1, (i - 1) * ik1);
  out.canonicalize();
  return out;
}

// 1 - (j / (j+1))^k.
Rational hook_tail_exact(long j, int k) {
  Rational ratio(j, j + 1);
  ratio.canonicalize();
  Rational power;
  mpz_pow_ui(power.get_num_mpz_t(), ratio.get_num_mpz_t(), static_cast<unsigned long>(k));
  mpz_pow_ui(power.get_den_mpz_t(), ratio.get_den_mpz_t(), static_cast<unsigned long>(k));
  return Rational(1) - power;
}

long double hook_head_float(long i, int k) {
  const long double id = static_cast<long double>(i);
  return (id - std::exp((1.0L - k) * std::log(id))) / (id - 1.0L);
}

long double hook_tail_float(long j, int k) {
  return -std::expm1(static_cast<long double>(k) * std::log1p(-1.0L / static_cast<long double>(j + 1)));
}

void check_hook_args(int n, int k) {
  if (n < 2) throw DomainError("first_row_hook: n must be at least 2");
  if (k < 1) throw DomainError("first_row_hook: k must be at least 1");
}

}  // namespace

ScaledScalar first_row_hook_eig(int i, int n, int k, NumericMode mode) {
  check_hook_args(n, k);
  if (i < 2 || i > n) throw DomainError("first_row_hook_eig: need 2 <= i <= n");
  if (mode == NumericMode::exact) {
    Rational defect = hook_head_exact(i, k);
    for (long j = i; j <= n - 1; ++j) defect += hook_tail_exact(j, k);
    return ScaledScalar(Rational(1) - defect / n);
  }
  long double defect = hook_head_float(i, k);
  for (long j = i; j <= n - 1; ++j) defect += hook_tail_float(j, k);
  return ScaledScalar(ExpFloat::from_double(static_cast<double>(1.0L - defect / n)));
}

std::vector<ScaledScalar> first_row_hook_spectrum(int n, int k, NumericMode mode) {
  check_hook_args(n, k);
  std::vector<ScaledScalar> out(static_cast<std::size_t>(n - 1));
  if (mode == NumericMode::exact) {
    Rational tail = 0;
    for (long i = n; i >= 2; --i) {
      if (i <= n - 1) tail += hook_tail_exact(i, k);
      out[static_cast<std::size_t>(i - 2)] =
          ScaledScalar(Rational(1) - (hook_head_exact(i, k) + tail) / n);
    }
    return out;
  }
  long double tail = 0.0L;
  for (long i = n; i >= 2; --i) {
    if (i <= n - 1) tail += hook_tail_float(i, k);
    const long double value = 1.0L - (hook_head_float(i, k) + tail) / n;
    out[static_cast<std::size_t>(i - 2)] = ScaledScalar(ExpFloat::from_double(static_cast<double>(value)));
  }
  return out;
}

GrowthSequence t_arrow(const Partition& shape, int s) {
  if (shape.length() < 2) throw DomainError("t_arrow: shape needs at least two rows");
  if (s < 2 || s > shape.row(1) + 1) throw DomainError("t_arrow: need 2 <= s <= lambda_1 + 1");
  std::vector<std::vector<int>> cells(static_cast<std::size_t>(shape.length()));
  int next = 1;
  for (int i = 1; i <= shape.length(); ++i) {
    auto& row = cells[static_cast<std::size_t>(i - 1)];
    for (int j = 1; j <= shape.row(i); ++j) {
      if (i == 2 && j == 1) {
        row.push_back(s);
        continue;
      }
      if (next == s) ++next;
      row.push_back(next++);
    }
  }
  return GrowthSequence::from_tableau(Tableau(std::move(cells)));
}

double raven_bound(int n, int m, double constant) {
  if (n < 2 || m < 1 || m > n - 1) throw DomainError("raven_bound: need 1 <= m <= n - 1");
  const double nd = n;
  const double first_row = (nd - m) / nd;
  double sum = 0.0;
  if (2 * m <= n) {
    for (int j = 1; j <= m; ++j) sum += (j - 1.0) / (nd - m + j);
    return first_row + sum / nd + constant / (nd * nd);
  }
  for (int j = 2; j <= n - m; ++j) sum += (j - 1.0) / (nd - m + j);
  return first_row + sum / nd + (nd - 2.0 * (nd - m)) / (3.0 * nd);
}

}  // namespace shuffle_spectra
