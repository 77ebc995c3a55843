#pragma once

#include <cstddef>
#include <memory>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

#include "shuffle_spectra/combinatorics.hpp"
#include "shuffle_spectra/scalar.hpp"

namespace shuffle_spectra {

/// Largest n for which the full tableau-indexed spectrum is enumerated.
inline constexpr int kMaxSpectrumSize = 14;

/// Argument of the box-addition increment nu(pi, a): add a box in row a of
/// pi, with k transpositions per shuffle step.
struct NuKey {
  /// Throws DomainError unless 1 <= a <= length(pi) + 1 and k >= 1.
  NuKey(Partition pi, int a, int k);

  Partition pi;
  int a;
  int k;

  friend bool operator==(const NuKey&, const NuKey&) = default;
};

struct NuKeyHash {
  std::size_t operator()(const NuKey& key) const noexcept;
};

/// Exact mode for the desk-scale regime (n <= 10, k <= 16), scaled otherwise.
NumericMode default_mode(int n, int k);

/// nu(pi, a) evaluated by truncated power series.
///
/// The sum over non-increasing switching tuples factors into one geometric
/// series per row: sum_m pi_a^m x^m for row a and 1 - x sum_m pi_i^m x^m for
/// each row i < a. The degree-l coefficient of their product is contracted
/// against C(k, l) / (|pi| + 1)^k.
ScaledScalar nu(const NuKey& key, NumericMode mode);

/// The signed part of nu(pi, a) coming from tuples with exactly u distinct
/// values below a. Zero for u >= a.
ScaledScalar nu_component(const NuKey& key, int u, NumericMode mode);

/// All components u = 0 .. a-1; their sum is nu(key).
std::vector<ScaledScalar> nu_components(const NuKey& key, NumericMode mode);

/// Reference evaluator: direct enumeration of every tuple (a, x_1, ..., x_l)
/// with a >= x_1 >= ... >= x_l >= 1. Exact; intended for small a * k only.
Rational nu_by_enumeration(const NuKey& key);
Rational nu_component_by_enumeration(const NuKey& key, int u);

/// ((pi_1 + 1) / (|pi| + 1))^k.
ScaledScalar nu_closed_a1(const Partition& pi, int k, NumericMode mode);
/// (1 - (|pi| + 1)^{k-1}) / (|pi| (|pi| + 1)^{k-1}); requires pi_2 = 0 and |pi| >= 1.
ScaledScalar nu_closed_a2_flat(const Partition& pi, int k, NumericMode mode);
/// ((pi_a + 1) / (|pi| + 1))^k.
ScaledScalar nu_closed_u0(const Partition& pi, int a, int k, NumericMode mode);

/// Memo table for nu values keyed by (pi, a, k) and numeric mode.
///
/// Concurrent insert-if-absent is safe; racing writers store identical values.
class NuCache {
 public:
  ScaledScalar get(const NuKey& key, NumericMode mode);
  std::size_t size() const;

 private:
  using Table = std::unordered_map<NuKey, ScaledScalar, NuKeyHash>;
  mutable std::shared_mutex mutex_;
  Table exact_;
  Table scaled_;
};

/// Eigenvalue attached to a standard tableau: (1/n) sum_i nu(lambda^(i), a^(i)).
ScaledScalar eigenvalue(const GrowthSequence& tableau, int k, NumericMode mode,
                        NuCache* cache = nullptr);

/// Main term (1/n) sum over boxes of j^k / T(i,j)^k.
ScaledScalar f0(const GrowthSequence& tableau, int k, NumericMode mode);

struct FDecomposition {
  ScaledScalar f0;
  ScaledScalar f_plus;  ///< eigenvalue - f0
};

FDecomposition f_decomposition(const GrowthSequence& tableau, int k, NumericMode mode,
                               NuCache* cache = nullptr);

/// Closed-form eigenvalue of the (n-1,1) tableau whose second row holds i.
/// Throws DomainError unless 2 <= i <= n.
ScaledScalar first_row_hook_eig(int i, int n, int k, NumericMode mode);

/// first_row_hook_eig(i, n, k) for i = 2..n (index i - 2) in O(n) total.
std::vector<ScaledScalar> first_row_hook_spectrum(int n, int k, NumericMode mode);

/// Tableau of `shape` filled left to right, top to bottom with 1..n, except
/// that T(2,1) = s. Requires at least two rows and 2 <= s <= lambda_1 + 1.
GrowthSequence t_arrow(const Partition& shape, int s);

/// Approximate per-shape eigenvalue bound for shapes with first row n - m.
/// `constant` stands in for the unspecified O(1/n^2) term (added as C / n^2
/// on the m <= n/2 branch).
double raven_bound(int n, int m, double constant = 0.0);

struct SpectrumEntry {
  Partition shape;
  std::size_t tableau_index = 0;  ///< lexicographic rank within the shape
  GrowthSequence tableau;
  BigInt multiplicity;            ///< d_lambda
  ScaledScalar eigenvalue;
  ScaledScalar f0;                ///< filled when decomposition was requested
  ScaledScalar f_plus;
};

struct SpectrumOptions {
  NumericMode mode = NumericMode::exact;
  bool use_cache = true;
  bool with_decomposition = false;
  unsigned threads = 0;  ///< 0: worker_count()
};

/// Every tableau of every shape of n, in canonical order (shapes in
/// reverse-lexicographic order, tableaux lexicographically).
/// Throws ResourceError for n > kMaxSpectrumSize.
std::vector<SpectrumEntry> formula_spectrum(int n, int k, const SpectrumOptions& options);

}  // namespace shuffle_spectra
