#pragma once

#include <vector>

#include "shuffle_spectra/distance_curve.hpp"
#include "shuffle_spectra/scalar.hpp"

namespace shuffle_spectra {

/// Threshold times, all in natural logarithms and left unfloored.
struct ThresholdSet {
  double general_upper = 0.0;     ///< n ln n + c n
  double gamma_upper = 0.0;       ///< (1 - gamma/2) n ln n + c n
  double l2_lower_general = 0.0;  ///< n ln n / 2 - c n
  double l2_lower_gamma = 0.0;    ///< (1 - gamma/2) n ln n - n ln ln n / 2 - c n
  double tv_lower = 0.0;          ///< n ln(n/k) - n ln ln n - c n
  double large_k_order = 0.0;     ///< 4 d n
};

double general_upper(int n, double c);
double gamma_upper(int n, double gamma, double c);
double l2_lower_general(int n, double c);
double l2_lower_gamma(int n, double gamma, double c);
double tv_lower(int n, double k, double c);
double large_k_order(int n, double d);

/// Throws DomainError for n < 3 or gamma outside (0, 1].
ThresholdSet thresholds(int n, double k, double gamma, double c, double d);

/// 1 - pi^2 / (6 (c - 4)^2); DomainError for c <= 4.
double tv_lower_asymptotic(double c);

/// Sum over non-trivial shapes of d_lambda * eig(T)^{2t}, over every SYT.
/// ResourceError for n > kMaxSpectrumSize. Metadata carries max_abs_eig.
DistanceCurve l2_upper_sq(int n, int k, const std::vector<long>& t_grid,
                          NumericMode mode = NumericMode::scaled);

struct StratumRow {
  long t = 0;
  int m = 0;  ///< 0 marks the small-first-row tail
  ScaledScalar value;
};

struct BoundedUpperCurve {
  DistanceCurve curve;
  std::vector<StratumRow> strata;
};

/// sum_{m=1}^{M} n^{2m} / m! * raven_bound(n, m, C)^{2t}, plus n! e^{-2t}
/// when M < n - 1. DomainError unless 1 <= M <= n - 1.
BoundedUpperCurve l2_upper_sq_bounded(int n, int k, const std::vector<long>& t_grid, int max_m,
                                      double constant = 0.0);

/// (n - 1) * sum_{i=2}^{n} first_row_hook_eig(i, n, k)^{2t}.
DistanceCurve l2_lower_sq(int n, int k, const std::vector<long>& t_grid,
                          NumericMode mode = NumericMode::scaled);

}  // namespace shuffle_spectra
