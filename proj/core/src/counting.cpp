#include <cmath>
#include <unordered_map>

#include "shuffle_spectra/combinatorics.hpp"
#include "shuffle_spectra/errors.hpp"

namespace shuffle_spectra {

namespace {

class SkewCounter {
 public:
  explicit SkewCounter(const Partition& outer) : outer_(outer) {}

  BigInt count(const Partition& current) {
    if (current == outer_) return 1;
    if (auto it = memo_.find(current); it != memo_.end()) return it->second;
    BigInt total = 0;
    for (int r = 1; r <= current.length() + 1; ++r) {
      if (current.can_add_box(r) && current.row(r) < outer_.row(r)) {
        total += count(current.with_box(r));
      }
    }
    memo_.emplace(current, total);
    return total;
  }

 private:
  const Partition& outer_;
  std::unordered_map<Partition, BigInt, PartitionHash> memo_;
};

}  // namespace

BigInt count_skew_tableaux(const Partition& outer, const Partition& inner) {
  if (!inner.fits_inside(outer)) return 0;
  SkewCounter counter(outer);
  return counter.count(inner);
}

DimSquareMass dim_square_mass(int n, int m) {
  if (n < 1 || m < 0 || m > n - 1) {
    throw DomainError("dim_square_mass: need 0 <= m <= n - 1");
  }
  DimSquareMass out;
  out.n = n;
  out.m = m;
  out.mass = 0;
  for (const Partition& shape : enumerate_partitions(n)) {
    if (shape.row(1) != n - m) continue;
    const BigInt d = dimension(shape);
    out.mass += d * d;
  }
  BigInt power;
  mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(n), 2UL * static_cast<unsigned long>(m));
  BigInt factorial;
  mpz_fac_ui(factorial.get_mpz_t(), static_cast<unsigned long>(m));
  out.bound = Rational(power, factorial);
  out.bound.canonicalize();
  out.bound_applies = m >= 1;
  out.below_bound = Rational(out.mass) < out.bound;
  return out;
}

BigInt count_by_t21(const Partition& shape, long threshold) {
  if (threshold < 1) throw DomainError("count_by_t21: threshold must be at least 1");
  if (shape.length() < 2) return 0;
  BigInt total = 0;
  // T(2,1) = s forces 1..s-1 into the first row; the rest is a skew filling.
  const long first = std::max(threshold + 1, 2L);
  const long last = static_cast<long>(shape.row(1)) + 1;
  for (long s = first; s <= last; ++s) {
    total += count_skew_tableaux(shape, Partition({static_cast<int>(s - 1), 1}));
  }
  return total;
}

long syt_split_threshold(int n, int m, double gamma) {
  const double split = n - m - 6.0 * m * std::pow(static_cast<double>(n), 1.0 - gamma);
  return static_cast<long>(std::ceil(split));
}

}  // namespace shuffle_spectra
