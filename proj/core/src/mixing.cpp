#include "shuffle_spectra/mixing.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "shuffle_spectra/errors.hpp"
#include "shuffle_spectra/parallel.hpp"
#include "shuffle_spectra/spectrum.hpp"

namespace shuffle_spectra {

namespace {

void check_threshold_n(int n) {
  if (n < 3) throw DomainError("thresholds: n must be at least 3 so that ln ln n > 0");
}

void check_gamma(double gamma) {
  if (!(gamma > 0.0 && gamma <= 1.0)) throw DomainError("thresholds: gamma must lie in (0, 1]");
}

void check_grid(const std::vector<long>& t_grid) {
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    if (t_grid[i] < 0) throw DomainError("t grid entries must be non-negative");
    if (i > 0 && t_grid[i] <= t_grid[i - 1]) throw DomainError("t grid must be strictly increasing");
  }
}

std::string format_meta(double value) { return format_double(value); }

}  // namespace

double general_upper(int n, double c) {
  check_threshold_n(n);
  return n * std::log(n) + c * n;
}

double gamma_upper(int n, double gamma, double c) {
  check_threshold_n(n);
  check_gamma(gamma);
  return (1.0 - gamma / 2.0) * n * std::log(n) + c * n;
}

double l2_lower_general(int n, double c) {
  check_threshold_n(n);
  return 0.5 * n * std::log(n) - c * n;
}

double l2_lower_gamma(int n, double gamma, double c) {
  check_threshold_n(n);
  check_gamma(gamma);
  return (1.0 - gamma / 2.0) * n * std::log(n) - 0.5 * n * std::log(std::log(n)) - c * n;
}

double tv_lower(int n, double k, double c) {
  check_threshold_n(n);
  if (!(k > 0.0)) throw DomainError("tv_lower: k must be positive");
  return n * std::log(n / k) - n * std::log(std::log(n)) - c * n;
}

double large_k_order(int n, double d) {
  check_threshold_n(n);
  return 4.0 * d * n;
}

ThresholdSet thresholds(int n, double k, double gamma, double c, double d) {
  ThresholdSet out;
  out.general_upper = general_upper(n, c);
  out.gamma_upper = gamma_upper(n, gamma, c);
  out.l2_lower_general = l2_lower_general(n, c);
  out.l2_lower_gamma = l2_lower_gamma(n, gamma, c);
  out.tv_lower = tv_lower(n, k, c);
  out.large_k_order = large_k_order(n, d);
  return out;
}

double tv_lower_asymptotic(double c) {
  if (!(c > 4.0)) throw DomainError("tv_lower_asymptotic: c must exceed 4");
  return 1.0 - std::numbers::pi * std::numbers::pi / (6.0 * (c - 4.0) * (c - 4.0));
}

DistanceCurve l2_upper_sq(int n, int k, const std::vector<long>& t_grid, NumericMode mode) {
  check_grid(t_grid);
  SpectrumOptions options;
  options.mode = mode;
  const std::vector<SpectrumEntry> spectrum = formula_spectrum(n, k, options);

  std::vector<ScaledScalar> eigs;
  std::vector<ScaledScalar> weights;
  double max_abs = 0.0;
  for (const auto& entry : spectrum) {
    max_abs = std::max(max_abs, entry.eigenvalue.abs().to_double());
    if (entry.shape.length() <= 1) continue;
    eigs.push_back(entry.eigenvalue);
    weights.push_back(ScaledScalar::from_integer(entry.multiplicity, mode));
  }

  std::vector<ScaledScalar> values(t_grid.size());
  parallel_for(t_grid.size(), [&](std::size_t g) {
    const auto power = static_cast<std::uint64_t>(2 * t_grid[g]);
    ScaledScalar total = ScaledScalar::from_integer(0, mode);
    for (std::size_t e = 0; e < eigs.size(); ++e) total += weights[e] * eigs[e].pow(power);
    values[g] = std::move(total);
  });

  DistanceCurve curve;
  for (std::size_t g = 0; g < t_grid.size(); ++g) curve.append(t_grid[g], values[g], Channel::l2_upper_sq);
  curve.metadata["n"] = std::to_string(n);
  curve.metadata["k"] = std::to_string(k);
  curve.metadata["mode"] = to_string(mode);
  curve.metadata["max_abs_eig"] = format_meta(max_abs);
  curve.metadata["max_abs_eig_ok"] = max_abs <= 1.0 + 1e-9 ? "true" : "false";
  return curve;
}

BoundedUpperCurve l2_upper_sq_bounded(int n, int k, const std::vector<long>& t_grid, int max_m,
                                      double constant) {
  if (n < 2) throw DomainError("l2_upper_sq_bounded: n must be at least 2");
  if (max_m < 1 || max_m > n - 1) throw DomainError("l2_upper_sq_bounded: need 1 <= M <= n - 1");
  check_grid(t_grid);

  std::vector<ExpFloat> prefactor;
  std::vector<ExpFloat> base;
  for (int m = 1; m <= max_m; ++m) {
    BigInt power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(n), 2UL * static_cast<unsigned long>(m));
    BigInt m_factorial;
    mpz_fac_ui(m_factorial.get_mpz_t(), static_cast<unsigned long>(m));
    prefactor.push_back(ExpFloat::from_rational(Rational(power, m_factorial)));
    base.push_back(ExpFloat::from_double(raven_bound(n, m, constant)));
  }
  const bool with_tail = max_m < n - 1;
  BigInt n_factorial;
  mpz_fac_ui(n_factorial.get_mpz_t(), static_cast<unsigned long>(n));
  const ExpFloat tail_prefactor = ExpFloat::from_integer(n_factorial);
  const ExpFloat inverse_e = ExpFloat::exp(-1.0);

  BoundedUpperCurve out;
  for (long t : t_grid) {
    ExpFloat total = ExpFloat::from_double(0.0);
    for (int m = 1; m <= max_m; ++m) {
      const auto idx = static_cast<std::size_t>(m - 1);
      const ExpFloat term = prefactor[idx] * base[idx].pow(static_cast<std::uint64_t>(2 * t));
      out.strata.push_back({t, m, ScaledScalar(term)});
      total = total + term;
    }
    if (with_tail) {
      const ExpFloat tail = tail_prefactor * inverse_e.pow(static_cast<std::uint64_t>(2 * t));
      out.strata.push_back({t, 0, ScaledScalar(tail)});
      total = total + tail;
    }
    out.curve.append(t, ScaledScalar(total), Channel::l2_upper_sq_bounded);
  }
  out.curve.metadata["n"] = std::to_string(n);
  out.curve.metadata["k"] = std::to_string(k);
  out.curve.metadata["trunc_m"] = std::to_string(max_m);
  out.curve.metadata["constant_c"] = format_meta(constant);
  out.curve.metadata["tail"] = with_tail ? "true" : "false";
  return out;
}

DistanceCurve l2_lower_sq(int n, int k, const std::vector<long>& t_grid, NumericMode mode) {
  if (n < 2) throw DomainError("l2_lower_sq: n must be at least 2");
  if (k < 1) throw DomainError("l2_lower_sq: k must be at least 1");
  check_grid(t_grid);
  const std::vector<ScaledScalar> hooks = first_row_hook_spectrum(n, k, mode);
  double max_abs = 0.0;
  for (const auto& h : hooks) max_abs = std::max(max_abs, h.abs().to_double());
  const ScaledScalar scale = ScaledScalar::from_integer(n - 1, mode);

  std::vector<ScaledScalar> values(t_grid.size());
  parallel_for(t_grid.size(), [&](std::size_t g) {
    const auto power = static_cast<std::uint64_t>(2 * t_grid[g]);
    ScaledScalar total = ScaledScalar::from_integer(0, mode);
    for (const auto& h : hooks) total += h.pow(power);
    values[g] = scale * total;
  });

  DistanceCurve curve;
  for (std::size_t g = 0; g < t_grid.size(); ++g) curve.append(t_grid[g], values[g], Channel::l2_lower_sq);
  curve.metadata["n"] = std::to_string(n);
  curve.metadata["k"] = std::to_string(k);
  curve.metadata["mode"] = to_string(mode);
  curve.metadata["max_abs_eig"] = format_meta(max_abs);
  curve.metadata["max_abs_eig_ok"] = max_abs <= 1.0 + 1e-9 ? "true" : "false";
  return curve;
}

}  // namespace shuffle_spectra
