#include <algorithm>
#include <cmath>
#include <cstdint>
#include <unordered_map>

#include "shuffle_spectra/chain.hpp"
#include "shuffle_spectra/errors.hpp"
#include "shuffle_spectra/parallel.hpp"
#include "shuffle_spectra/spectrum.hpp"

namespace shuffle_spectra {

namespace {

void check_chain_args(int n, int k, int limit, const char* what) {
  if (n < 1) throw DomainError(std::string(what) + ": n must be at least 1");
  if (k < 1) throw DomainError(std::string(what) + ": k must be at least 1");
  if (n > limit) {
    throw ResourceError(std::string(what) + ": n = " + std::to_string(n) + " exceeds the limit n <= " +
                        std::to_string(limit));
  }
}

// Images packed four bits per position; n <= 8 fits in 32 bits.
using Packed = std::uint32_t;

Packed pack(const std::vector<int>& image) {
  Packed out = 0;
  for (std::size_t x = 0; x < image.size(); ++x) out |= static_cast<Packed>(image[x] - 1) << (4 * x);
  return out;
}

std::vector<int> unpack(Packed packed, int n) {
  std::vector<int> image(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) image[static_cast<std::size_t>(x)] = static_cast<int>((packed >> (4 * x)) & 0xF) + 1;
  return image;
}

// (a b) o sigma: exchange the values a and b in the image.
Packed swap_values(Packed packed, int n, int a, int b) {
  if (a == b) return packed;
  const Packed va = static_cast<Packed>(a - 1);
  const Packed vb = static_cast<Packed>(b - 1);
  for (int x = 0; x < n; ++x) {
    const Packed v = (packed >> (4 * x)) & 0xF;
    if (v == va || v == vb) {
      packed &= ~(Packed{0xF} << (4 * x));
      packed |= (v == va ? vb : va) << (4 * x);
    }
  }
  return packed;
}

StepDistribution from_counts(int n, int k, const std::vector<std::unordered_map<Packed, BigInt>>& per_j) {
  StepDistribution out;
  out.n = n;
  out.k = k;
  for (int j = 1; j <= n; ++j) {
    BigInt jk;
    mpz_ui_pow_ui(jk.get_mpz_t(), static_cast<unsigned long>(j), static_cast<unsigned long>(k));
    const BigInt denominator = jk * n;
    for (const auto& [packed, count] : per_j[static_cast<std::size_t>(j - 1)]) {
      Rational mass(count, denominator);
      mass.canonicalize();
      out.mass[Permutation(unpack(packed, n))] += mass;
    }
  }
  return out;
}

struct Support {
  std::vector<Permutation> elements;
  std::vector<Rational> mass;
};

Support support_of(int n, int k) {
  const StepDistribution step = step_distribution(n, k);
  Support out;
  for (const auto& [g, p] : step.mass) {
    out.elements.push_back(g);
    out.mass.push_back(p);
  }
  return out;
}

std::vector<Permutation> all_states(int n) {
  const std::size_t count = factorial(n);
  std::vector<Permutation> out;
  out.reserve(count);
  for (std::size_t r = 0; r < count; ++r) out.push_back(Permutation::unrank(n, r));
  return out;
}

template <typename T>
T convert(const Rational& value);

template <>
Rational convert<Rational>(const Rational& value) {
  return value;
}

template <>
double convert<double>(const Rational& value) {
  return value.get_d();
}

template <typename T>
DenseMatrix<T> build_matrix(int n, int k) {
  check_chain_args(n, k, kMaxMatrixSize, "transition_matrix");
  const Support support = support_of(n, k);
  const std::vector<Permutation> states = all_states(n);
  std::vector<T> mass;
  for (const auto& p : support.mass) mass.push_back(convert<T>(p));
  DenseMatrix<T> out(states.size());
  parallel_for(states.size(), [&](std::size_t x) {
    for (std::size_t s = 0; s < support.elements.size(); ++s) {
      out(x, (states[x] * support.elements[s]).rank()) += mass[s];
    }
  });
  return out;
}

template <typename T>
T abs_value(const T& value) {
  return value < 0 ? T(-value) : value;
}

template <typename T>
void propagate_distances(int n, int k, long t_max, StepConvention convention, DistanceCurve& curve,
                         NumericMode mode) {
  const Support support = support_of(n, k);
  const std::vector<Permutation> states = all_states(n);
  const std::size_t count = states.size();
  const std::size_t width = support.elements.size();
  std::vector<T> mass;
  for (const auto& p : support.mass) mass.push_back(convert<T>(p));

  // source[y * width + s] is the state that steps to y under support element s.
  std::vector<std::uint16_t> source(count * width);
  std::vector<Permutation> inverses;
  for (const auto& g : support.elements) inverses.push_back(g.inverse());
  parallel_for(count, [&](std::size_t y) {
    for (std::size_t s = 0; s < width; ++s) {
      const Permutation x = convention == StepConvention::right ? states[y] * inverses[s] : inverses[s] * states[y];
      source[y * width + s] = static_cast<std::uint16_t>(x.rank());
    }
  });

  const T uniform = T(1) / T(static_cast<long>(count));
  std::vector<T> current(count, T(0));
  current[0] = T(1);
  std::vector<T> next(count, T(0));
  const auto record = [&](long t) {
    T tv = T(0);
    T l2 = T(0);
    for (const T& value : current) {
      const T deviation = value - uniform;
      tv += abs_value(deviation);
      l2 += deviation * deviation;
    }
    tv /= T(2);
    l2 *= T(static_cast<long>(count));
    if constexpr (std::is_same_v<T, Rational>) {
      curve.append(t, ScaledScalar(tv), Channel::tv_exact);
      curve.append(t, ScaledScalar(l2), Channel::l2_exact);
    } else {
      curve.append(t, ScaledScalar(ExpFloat::from_double(tv)), Channel::tv_exact);
      curve.append(t, ScaledScalar(ExpFloat::from_double(l2)), Channel::l2_exact);
    }
  };
  (void)mode;
  record(0);
  for (long t = 1; t <= t_max; ++t) {
    parallel_for(count, [&](std::size_t y) {
      T sum = T(0);
      const std::uint16_t* row = source.data() + y * width;
      for (std::size_t s = 0; s < width; ++s) sum += current[row[s]] * mass[s];
      next[y] = sum;
    });
    std::swap(current, next);
    record(t);
  }
}

}  // namespace

Rational StepDistribution::total() const {
  Rational out = 0;
  for (const auto& [g, p] : mass) out += p;
  return out;
}

Rational StepDistribution::probability(const Permutation& g) const {
  const auto it = mass.find(g);
  return it == mass.end() ? Rational(0) : it->second;
}

StepDistribution step_distribution(int n, int k) {
  check_chain_args(n, k, kMaxStepDistributionSize, "step_distribution");
  const Packed identity = pack(Permutation::identity(n).image());
  std::vector<std::unordered_map<Packed, BigInt>> per_j(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) {
    std::unordered_map<Packed, BigInt> counts{{identity, BigInt(1)}};
    for (int step = 0; step < k; ++step) {
      std::unordered_map<Packed, BigInt> next;
      next.reserve(counts.size() * 2);
      for (const auto& [packed, count] : counts) {
        for (int i = 1; i <= j; ++i) next[swap_values(packed, n, j, i)] += count;
      }
      counts = std::move(next);
    }
    per_j[static_cast<std::size_t>(j - 1)] = std::move(counts);
  }
  return from_counts(n, k, per_j);
}

StepDistribution step_distribution_by_enumeration(int n, int k) {
  check_chain_args(n, k, kMaxStepDistributionSize, "step_distribution_by_enumeration");
  if (static_cast<double>(n) * std::pow(static_cast<double>(n), k) > kMaxEnumeratedTuples) {
    throw ResourceError("step_distribution_by_enumeration: n * n^k exceeds 1e7 tuples");
  }
  std::vector<std::unordered_map<Packed, BigInt>> per_j(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) {
    std::vector<int> tuple(static_cast<std::size_t>(k), 1);
    auto& counts = per_j[static_cast<std::size_t>(j - 1)];
    while (true) {
      counts[pack(generator_element(n, j, tuple).image())] += 1;
      std::size_t pos = 0;
      while (pos < tuple.size() && tuple[pos] == j) tuple[pos++] = 1;
      if (pos == tuple.size()) break;
      ++tuple[pos];
    }
  }
  return from_counts(n, k, per_j);
}

DenseMatrix<double> transition_matrix(int n, int k) { return build_matrix<double>(n, k); }

DenseMatrix<Rational> transition_matrix_exact(int n, int k) { return build_matrix<Rational>(n, k); }

std::vector<double> oracle_spectrum(int n, int k, double tol) {
  return jacobi_eigenvalues(transition_matrix(n, k), tol);
}

DistanceCurve exact_distances(int n, int k, long t_max, NumericMode mode, StepConvention convention) {
  check_chain_args(n, k, kMaxMatrixSize, "exact_distances");
  if (t_max < 0) throw DomainError("exact_distances: t_max must be non-negative");
  DistanceCurve curve;
  curve.metadata["n"] = std::to_string(n);
  curve.metadata["k"] = std::to_string(k);
  curve.metadata["t_max"] = std::to_string(t_max);
  curve.metadata["mode"] = to_string(mode);
  curve.metadata["convention"] = convention == StepConvention::right ? "right" : "left";
  if (mode == NumericMode::exact) {
    propagate_distances<Rational>(n, k, t_max, convention, curve, mode);
  } else {
    propagate_distances<double>(n, k, t_max, convention, curve, mode);
  }
  return curve;
}

SpectrumComparison compare_spectra(int n, int k, double tol) {
  check_chain_args(n, k, kMaxCompareSize, "compare_spectra");
  SpectrumComparison out;
  out.n = n;
  out.k = k;
  out.tol = tol;
  SpectrumOptions options;
  options.mode = default_mode(n, k);
  for (const auto& entry : formula_spectrum(n, k, options)) {
    const double value = entry.eigenvalue.to_double();
    out.formula.insert(out.formula.end(), entry.multiplicity.get_ui(), value);
  }
  std::sort(out.formula.begin(), out.formula.end(), std::greater<>());
  out.oracle = oracle_spectrum(n, k);
  for (std::size_t i = 0; i < out.formula.size() && i < out.oracle.size(); ++i) {
    const double gap = std::fabs(out.formula[i] - out.oracle[i]);
    if (gap > tol) {
      out.mismatches.push_back({out.formula[i], out.oracle[i], gap});
    } else {
      ++out.matched;
    }
  }
  for (double v : out.formula) out.max_abs_eig_formula = std::max(out.max_abs_eig_formula, std::fabs(v));
  for (double v : out.oracle) out.max_abs_eig_oracle = std::max(out.max_abs_eig_oracle, std::fabs(v));
  return out;
}

}  // namespace shuffle_spectra
