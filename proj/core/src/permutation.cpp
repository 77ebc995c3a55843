#include <algorithm>
#include <numeric>

#include "shuffle_spectra/chain.hpp"
#include "shuffle_spectra/errors.hpp"

namespace shuffle_spectra {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  const auto n = image_.size();
  std::vector<bool> seen(n + 1, false);
  for (int value : image_) {
    if (value < 1 || static_cast<std::size_t>(value) > n || seen[static_cast<std::size_t>(value)]) {
      throw DomainError("Permutation: image is not a bijection on 1..n");
    }
    seen[static_cast<std::size_t>(value)] = true;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 0) throw DomainError("Permutation::identity: negative size");
  Permutation out;
  out.image_.resize(static_cast<std::size_t>(n));
  std::iota(out.image_.begin(), out.image_.end(), 1);
  return out;
}

Permutation Permutation::transposition(int n, int a, int b) {
  if (a < 1 || a > n || b < 1 || b > n) throw DomainError("Permutation::transposition: index out of range");
  Permutation out = identity(n);
  std::swap(out.image_[static_cast<std::size_t>(a - 1)], out.image_[static_cast<std::size_t>(b - 1)]);
  return out;
}

std::size_t factorial(int n) {
  if (n < 0 || n > 20) throw DomainError("factorial: argument out of range");
  std::size_t out = 1;
  for (int i = 2; i <= n; ++i) out *= static_cast<std::size_t>(i);
  return out;
}

Permutation Permutation::unrank(int n, std::size_t rank) {
  if (rank >= factorial(n)) throw DomainError("Permutation::unrank: rank out of range");
  std::vector<int> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 1);
  Permutation out;
  out.image_.reserve(pool.size());
  for (int i = n; i >= 1; --i) {
    const std::size_t block = factorial(i - 1);
    const std::size_t digit = rank / block;
    rank %= block;
    out.image_.push_back(pool[digit]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digit));
  }
  return out;
}

std::size_t Permutation::rank() const {
  const auto n = image_.size();
  std::size_t out = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t smaller = 0;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (image_[j] < image_[i]) ++smaller;
    }
    out = out * (n - i) + smaller;
  }
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.image_.resize(image_.size());
  for (std::size_t x = 0; x < image_.size(); ++x) {
    out.image_[static_cast<std::size_t>(image_[x] - 1)] = static_cast<int>(x) + 1;
  }
  return out;
}

bool Permutation::is_identity() const {
  for (std::size_t x = 0; x < image_.size(); ++x) {
    if (image_[x] != static_cast<int>(x) + 1) return false;
  }
  return true;
}

std::string Permutation::to_string() const {
  std::string out = "[";
  for (std::size_t x = 0; x < image_.size(); ++x) {
    if (x > 0) out += ' ';
    out += std::to_string(image_[x]);
  }
  return out + "]";
}

Permutation operator*(const Permutation& lhs, const Permutation& rhs) {
  if (lhs.size() != rhs.size()) throw DomainError("Permutation: size mismatch in composition");
  Permutation out;
  out.image_.resize(rhs.image_.size());
  for (std::size_t x = 0; x < rhs.image_.size(); ++x) {
    out.image_[x] = lhs.image_[static_cast<std::size_t>(rhs.image_[x] - 1)];
  }
  return out;
}

Permutation generator_element(int n, int j, const std::vector<int>& switches) {
  if (j < 1 || j > n) throw DomainError("generator_element: j out of range");
  Permutation out = Permutation::identity(n);
  for (int i : switches) {
    if (i < 1 || i > j) throw DomainError("generator_element: switch position out of range");
    out = Permutation::transposition(n, j, i) * out;
  }
  return out;
}

}  // namespace shuffle_spectra
