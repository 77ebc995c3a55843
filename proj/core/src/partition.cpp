#include <algorithm>
#include <numeric>

#include "shuffle_spectra/combinatorics.hpp"
#include "shuffle_spectra/errors.hpp"

namespace shuffle_spectra {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw DomainError("Partition: parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw DomainError("Partition: parts must be weakly decreasing");
    }
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::single_row(int n) {
  if (n < 0) throw DomainError("Partition: negative size");
  return n == 0 ? Partition() : Partition({n});
}

Partition Partition::stacked_rows(int n, int row_length) {
  if (row_length < 1 || row_length > n) {
    throw DomainError("Partition::stacked_rows: row length must lie in [1, n]");
  }
  std::vector<int> parts(static_cast<std::size_t>(n / row_length), row_length);
  if (n % row_length != 0) parts.push_back(n % row_length);
  return Partition(std::move(parts));
}

int Partition::row(int i) const {
  if (i < 1 || i > length()) return 0;
  return parts_[static_cast<std::size_t>(i - 1)];
}

bool Partition::can_add_box(int r) const {
  if (r < 1 || r > length() + 1) return false;
  return r == 1 || row(r - 1) > row(r);
}

Partition Partition::with_box(int r) const {
  if (!can_add_box(r)) throw DomainError("Partition: cannot add a box to row " + std::to_string(r));
  Partition out = *this;
  if (r == length() + 1) {
    out.parts_.push_back(1);
  } else {
    ++out.parts_[static_cast<std::size_t>(r - 1)];
  }
  ++out.size_;
  return out;
}

bool Partition::can_remove_box(int r) const {
  if (r < 1 || r > length()) return false;
  return row(r) > row(r + 1);
}

Partition Partition::without_box(int r) const {
  if (!can_remove_box(r)) {
    throw DomainError("Partition: cannot remove a box from row " + std::to_string(r));
  }
  Partition out = *this;
  if (--out.parts_[static_cast<std::size_t>(r - 1)] == 0) out.parts_.pop_back();
  --out.size_;
  return out;
}

bool Partition::fits_inside(const Partition& outer) const {
  if (length() > outer.length()) return false;
  for (int i = 1; i <= length(); ++i) {
    if (row(i) > outer.row(i)) return false;
  }
  return true;
}

std::string Partition::to_string() const {
  if (parts_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out += '-';
    out += std::to_string(parts_[i]);
  }
  return out;
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (int part : p.parts()) {
    h ^= static_cast<std::size_t>(part);
    h *= 1099511628211ULL;
  }
  return h;
}

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 1) throw DomainError("enumerate_partitions: n must be at least 1");
  std::vector<Partition> out;
  std::vector<int> parts{n};
  for (;;) {
    out.emplace_back(parts);
    // Next in reverse-lexicographic order: take the rightmost part > 1,
    // decrement it, and spread the freed units greedily behind it.
    int remainder = 0;
    while (!parts.empty() && parts.back() == 1) {
      ++remainder;
      parts.pop_back();
    }
    if (parts.empty()) break;
    const int largest = --parts.back();
    ++remainder;
    while (remainder > largest) {
      parts.push_back(largest);
      remainder -= largest;
    }
    parts.push_back(remainder);
  }
  return out;
}

BigInt dimension(const Partition& shape) {
  BigInt numerator;
  mpz_fac_ui(numerator.get_mpz_t(), static_cast<unsigned long>(shape.size()));
  BigInt hooks = 1;
  // Column lengths give the leg of each cell.
  std::vector<int> columns(static_cast<std::size_t>(shape.row(1)), 0);
  for (int part : shape.parts()) {
    for (int j = 0; j < part; ++j) ++columns[static_cast<std::size_t>(j)];
  }
  for (int i = 1; i <= shape.length(); ++i) {
    for (int j = 1; j <= shape.row(i); ++j) {
      const int arm = shape.row(i) - j;
      const int leg = columns[static_cast<std::size_t>(j - 1)] - i;
      hooks *= arm + leg + 1;
    }
  }
  return numerator / hooks;
}

}  // namespace shuffle_spectra
