#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "shuffle_spectra/scalar.hpp"

namespace shuffle_spectra {

/// An integer partition: weakly decreasing positive parts, no trailing zeros.
///
/// Row indices in the public API are 1-based, matching the usual Young
/// diagram conventions; `row(i)` is 0 past the last row.
class Partition {
 public:
  Partition() = default;
  /// Throws DomainError unless `parts` is weakly decreasing and positive.
  explicit Partition(std::vector<int> parts);

  static Partition single_row(int n);
  /// The shape (r, r, ..., r, rest): as many rows of length `row_length` as
  /// fit in n, then the remainder. For 2 * row_length >= n this is (r, n - r).
  static Partition stacked_rows(int n, int row_length);

  std::span<const int> parts() const { return parts_; }
  int row(int i) const;
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const { return size_; }
  bool empty() const { return parts_.empty(); }
  /// n - lambda_1: how many boxes lie below the first row.
  int first_row_deficit() const { return size_ - row(1); }

  bool can_add_box(int row) const;
  Partition with_box(int row) const;
  bool can_remove_box(int row) const;
  Partition without_box(int row) const;
  /// True when this diagram is contained in `outer`.
  bool fits_inside(const Partition& outer) const;

  /// Parts joined by '-', e.g. "4-2-1"; "0" for the empty partition.
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& lhs, const Partition& rhs) {
    return lhs.parts_ <=> rhs.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

struct PartitionHash {
  std::size_t operator()(const Partition& p) const noexcept;
};

/// All partitions of n, each once, in reverse-lexicographic order starting at (n).
/// Throws DomainError for n < 1.
std::vector<Partition> enumerate_partitions(int n);

/// Number of standard Young tableaux of shape `shape` (hook-length formula).
BigInt dimension(const Partition& shape);

/// Filling of a Young diagram, indexed from 1: at(i, j) is the entry in row i, column j.
class Tableau {
 public:
  explicit Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {}

  int at(int row, int col) const { return rows_.at(row - 1).at(col - 1); }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  Partition shape() const;

  friend bool operator==(const Tableau&, const Tableau&) = default;

 private:
  std::vector<std::vector<int>> rows_;
};

/// A standard Young tableau encoded by the row a^(i) that receives entry i + 1.
///
/// Prefix i is the partition formed by the entries 1..i. Every prefix is a
/// valid partition, so the induced filling is standard.
class GrowthSequence {
 public:
  GrowthSequence() = default;
  /// Throws DomainError when some step breaks the partition shape.
  explicit GrowthSequence(std::vector<int> rows);
  /// Reads the growth rows off a filled tableau; throws DomainError if not standard.
  static GrowthSequence from_tableau(const Tableau& tableau);

  std::span<const int> rows() const { return rows_; }
  int size() const { return static_cast<int>(rows_.size()); }
  const Partition& shape() const { return shape_; }
  /// lambda^(i): the partition formed by the boxes holding 1..i, 0 <= i <= n.
  Partition prefix(int i) const;
  Tableau tableau() const;
  /// T(2,1), or 0 for single-row shapes.
  int second_row_start() const;

  friend bool operator==(const GrowthSequence& lhs, const GrowthSequence& rhs) {
    return lhs.rows_ == rhs.rows_;
  }

 private:
  std::vector<int> rows_;
  Partition shape_;
};

/// Lazily yields every standard Young tableau of a shape, lexicographically
/// by growth rows.
class GrowthSequenceStream {
 public:
  explicit GrowthSequenceStream(Partition shape);

  /// The next tableau, or std::nullopt once the stream is exhausted.
  std::optional<GrowthSequence> next();

 private:
  bool advance();
  int smallest_addable(int above) const;

  Partition shape_;
  std::vector<int> rows_;
  std::vector<int> fill_;  // current prefix row lengths
  bool started_ = false;
  bool done_ = false;
};

std::vector<GrowthSequence> enumerate_growth_sequences(const Partition& shape);

/// Standard fillings of the skew diagram outer / inner.
BigInt count_skew_tableaux(const Partition& outer, const Partition& inner);

struct DimSquareMass {
  int n = 0;
  int m = 0;
  BigInt mass;              ///< sum of d_lambda^2 over lambda |- n with lambda_1 = n - m
  Rational bound;           ///< n^{2m} / m!
  bool bound_applies = false;  ///< the inequality is only claimed for m >= 1
  bool below_bound = false;
};

/// Throws DomainError unless 0 <= m <= n - 1.
DimSquareMass dim_square_mass(int n, int m);

/// Number of standard tableaux of `shape` with T(2,1) > threshold.
/// Single-row shapes give 0; throws DomainError for threshold < 1.
BigInt count_by_t21(const Partition& shape, long threshold);

/// Ceiling of the real-valued split point n - m - 6 m n^{1 - gamma}.
long syt_split_threshold(int n, int m, double gamma);

}  // namespace shuffle_spectra
