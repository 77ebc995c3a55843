#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "shuffle_spectra/distance_curve.hpp"
#include "shuffle_spectra/scalar.hpp"

namespace shuffle_spectra {

/// Largest deck for which the step distribution is materialized.
inline constexpr int kMaxStepDistributionSize = 8;
/// Largest deck for which the n! x n! transition matrix is built.
inline constexpr int kMaxMatrixSize = 7;
/// Largest deck accepted by compare_spectra.
inline constexpr int kMaxCompareSize = 6;
/// Guard on n * n^k for the tuple-enumerating reference distribution.
inline constexpr double kMaxEnumeratedTuples = 1e7;

/// A permutation of positions 1..n in one-line notation.
///
/// Composition follows function composition: (a * b)(x) = a(b(x)).
class Permutation {
 public:
  Permutation() = default;
  /// `image[x-1]` is the image of x; throws DomainError unless a bijection on 1..n.
  explicit Permutation(std::vector<int> image);

  static Permutation identity(int n);
  static Permutation transposition(int n, int a, int b);
  /// Inverse of rank(): lexicographic order, rank 0 is the identity.
  static Permutation unrank(int n, std::size_t rank);

  int size() const { return static_cast<int>(image_.size()); }
  int operator()(int x) const { return image_[static_cast<std::size_t>(x - 1)]; }
  const std::vector<int>& image() const { return image_; }
  /// Lexicographic rank via the Lehmer code.
  std::size_t rank() const;
  Permutation inverse() const;
  bool is_identity() const;
  std::string to_string() const;

  friend Permutation operator*(const Permutation& lhs, const Permutation& rhs);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& lhs, const Permutation& rhs) {
    return lhs.image_ <=> rhs.image_;
  }

 private:
  std::vector<int> image_;
};

std::size_t factorial(int n);

/// The group element (j; i_1, ..., i_k) = (j i_k) ... (j i_1).
Permutation generator_element(int n, int j, const std::vector<int>& switches);

/// Law of one shuffle step: each (j; i_1..i_k) carries mass 1 / (n j^k).
struct StepDistribution {
  int n = 0;
  int k = 0;
  std::map<Permutation, Rational> mass;

  Rational total() const;
  Rational probability(const Permutation& g) const;
};

/// Exact step law, built by convolving the k switches of each top position j.
/// Throws ResourceError for n > kMaxStepDistributionSize.
StepDistribution step_distribution(int n, int k);

/// Reference step law that enumerates every tuple (j; i_1..i_k).
/// Throws ResourceError unless n <= 8 and n * n^k <= 1e7.
StepDistribution step_distribution_by_enumeration(int n, int k);

template <typename T>
struct DenseMatrix {
  std::size_t dim = 0;
  std::vector<T> data;

  DenseMatrix() = default;
  explicit DenseMatrix(std::size_t d) : dim(d), data(d * d, T(0)) {}
  T& operator()(std::size_t r, std::size_t c) { return data[r * dim + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data[r * dim + c]; }
};

/// M[x][y] = P(x^{-1} y): the chain moves x -> x * g. Rows and columns are
/// lexicographic permutation ranks. Throws ResourceError for n > kMaxMatrixSize.
DenseMatrix<double> transition_matrix(int n, int k);
DenseMatrix<Rational> transition_matrix_exact(int n, int k);

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, sorted
/// descending. Throws NumericError when the off-diagonal does not fall
/// below `tol` within `max_sweeps`.
std::vector<double> jacobi_eigenvalues(DenseMatrix<double> matrix, double tol = 1e-12,
                                       int max_sweeps = 100);

/// Eigenvalues of the transition matrix (n! values, descending).
std::vector<double> oracle_spectrum(int n, int k, double tol = 1e-12);

/// How a step acts on the current state.
enum class StepConvention { right, left };

/// TV and squared l2 distance from uniform after t = 0..t_max steps started
/// at the identity. Exact mode uses rationals; scaled mode uses doubles.
DistanceCurve exact_distances(int n, int k, long t_max, NumericMode mode = NumericMode::scaled,
                              StepConvention convention = StepConvention::right);

struct SpectrumMismatch {
  double formula = 0.0;
  double oracle = 0.0;
  double gap = 0.0;
};

/// Formula spectrum (with multiplicities) matched positionally against the oracle.
struct SpectrumComparison {
  int n = 0;
  int k = 0;
  double tol = 0.0;
  std::vector<double> formula;  ///< descending, n! entries
  std::vector<double> oracle;   ///< descending, n! entries
  std::size_t matched = 0;
  std::vector<SpectrumMismatch> mismatches;
  double max_abs_eig_formula = 0.0;
  double max_abs_eig_oracle = 0.0;
};

/// Never throws on disagreement; mismatches are reported. ResourceError for n > 6.
SpectrumComparison compare_spectra(int n, int k, double tol = 1e-8);

}  // namespace shuffle_spectra
