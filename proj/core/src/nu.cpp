#include <mutex>

#include "shuffle_spectra/errors.hpp"
#include "shuffle_spectra/spectrum.hpp"

namespace shuffle_spectra {

namespace {

template <typename S>
S make(long value);

template <>
Rational make<Rational>(long value) {
  return Rational(value);
}

template <>
ExpFloat make<ExpFloat>(long value) {
  return ExpFloat::from_double(static_cast<double>(value));
}

// f / (1 - c x), truncated to the length of f.
template <typename S>
std::vector<S> divide_geometric(const std::vector<S>& f, const S& c) {
  std::vector<S> h(f.size());
  for (std::size_t l = 0; l < f.size(); ++l) {
    h[l] = f[l];
    if (l > 0) h[l] += c * h[l - 1];
  }
  return h;
}

// Unsigned component sums: entry u is
//   (1 / (|pi|+1)^k) sum_l C(k,l) sum_{tuples with u(a-bar) = u} prod_i pi_i^{d_i}.
// Tracking u with a marker keeps every coefficient non-negative, so the
// scaled evaluation never cancels inside a component.
template <typename S>
std::vector<S> component_magnitudes(const Partition& pi, int a, int k) {
  const auto levels = static_cast<std::size_t>(a);
  const auto degree = static_cast<std::size_t>(k);
  std::vector<std::vector<S>> poly(levels, std::vector<S>(degree + 1, make<S>(0)));
  poly[0][0] = make<S>(1);
  // Row a contributes sum_m pi_a^m x^m (0^0 = 1 when row a is empty).
  poly[0] = divide_geometric(poly[0], make<S>(pi.row(a)));
  // Each row i < a contributes 1 + y x sum_m pi_i^m x^m.
  for (int i = 1; i < a; ++i) {
    const S c = make<S>(pi.row(i));
    const auto top = std::min(static_cast<std::size_t>(i), levels - 1);
    for (std::size_t u = top; u-- > 0;) {
      const std::vector<S> shifted = divide_geometric(poly[u], c);
      for (std::size_t l = 0; l < degree; ++l) poly[u + 1][l + 1] += shifted[l];
    }
  }

  // C(k, l) / (|pi| + 1)^k by the multiplicative recurrence.
  S weight = make<S>(1) / make<S>(pi.size() + 1);
  S base = weight;
  for (int e = 1; e < k; ++e) weight *= base;

  std::vector<S> out(levels, make<S>(0));
  for (std::size_t l = 0; l <= degree; ++l) {
    for (std::size_t u = 0; u < levels; ++u) out[u] += weight * poly[u][l];
    if (l < degree) {
      weight *= make<S>(static_cast<long>(degree - l));
      weight /= make<S>(static_cast<long>(l + 1));
    }
  }
  return out;
}

std::vector<ScaledScalar> signed_components(const NuKey& key, NumericMode mode) {
  std::vector<ScaledScalar> out;
  out.reserve(static_cast<std::size_t>(key.a));
  if (mode == NumericMode::exact) {
    auto magnitudes = component_magnitudes<Rational>(key.pi, key.a, key.k);
    for (std::size_t u = 0; u < magnitudes.size(); ++u) {
      if (u % 2 == 1) magnitudes[u] = -magnitudes[u];
      out.emplace_back(std::move(magnitudes[u]));
    }
  } else {
    auto magnitudes = component_magnitudes<ExpFloat>(key.pi, key.a, key.k);
    for (std::size_t u = 0; u < magnitudes.size(); ++u) {
      out.emplace_back(u % 2 == 1 ? -magnitudes[u] : magnitudes[u]);
    }
  }
  return out;
}

// Walks all multisets {x_1..x_l} of values in [1, a] with their counts.
class TupleEnumerator {
 public:
  TupleEnumerator(const NuKey& key, int only_u)
      : key_(key), only_u_(only_u), counts_(static_cast<std::size_t>(key.a) + 1, 0) {}

  Rational run() {
    Rational total = 0;
    for (int l = 0; l <= key_.k; ++l) {
      BigInt binom;
      mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(key_.k),
                   static_cast<unsigned long>(l));
      sum_ = 0;
      distribute(key_.a, l);
      total += Rational(binom) * Rational(sum_);
    }
    BigInt denominator;
    mpz_ui_pow_ui(denominator.get_mpz_t(), static_cast<unsigned long>(key_.pi.size() + 1),
                  static_cast<unsigned long>(key_.k));
    total /= Rational(denominator);
    return total;
  }

 private:
  void distribute(int value, int remaining) {
    if (value == 1) {
      counts_[1] = remaining;
      visit();
      return;
    }
    for (int c = 0; c <= remaining; ++c) {
      counts_[static_cast<std::size_t>(value)] = c;
      distribute(value - 1, remaining - c);
    }
  }

  void visit() {
    const int a = key_.a;
    int u = 0;
    BigInt term = 1;
    for (int i = 1; i <= a; ++i) {
      // The leading entry contributes one occurrence of a.
      const int occurrences = counts_[static_cast<std::size_t>(i)] + (i == a ? 1 : 0);
      if (i < a && occurrences > 0) ++u;
      const int d = occurrences > 0 ? occurrences - 1 : 0;
      BigInt power;
      mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(key_.pi.row(i)),
                    static_cast<unsigned long>(d));
      term *= power;
    }
    if (only_u_ >= 0 && u != only_u_) return;
    if (u % 2 == 1) term = -term;
    sum_ += term;
  }

  const NuKey& key_;
  int only_u_;
  std::vector<int> counts_;
  BigInt sum_;
};

}  // namespace

NuKey::NuKey(Partition pi_in, int a_in, int k_in) : pi(std::move(pi_in)), a(a_in), k(k_in) {
  if (a < 1 || a > pi.length() + 1) {
    throw DomainError("NuKey: row " + std::to_string(a) + " is not addable to " + pi.to_string());
  }
  if (k < 1) throw DomainError("NuKey: k must be at least 1");
}

std::size_t NuKeyHash::operator()(const NuKey& key) const noexcept {
  std::size_t h = PartitionHash{}(key.pi);
  h ^= static_cast<std::size_t>(key.a) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  h ^= static_cast<std::size_t>(key.k) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

NumericMode default_mode(int n, int k) {
  return (n <= 10 && k <= 16) ? NumericMode::exact : NumericMode::scaled;
}

std::vector<ScaledScalar> nu_components(const NuKey& key, NumericMode mode) {
  return signed_components(key, mode);
}

ScaledScalar nu(const NuKey& key, NumericMode mode) {
  const auto components = signed_components(key, mode);
  ScaledScalar total = ScaledScalar::from_integer(0, mode);
  for (const auto& c : components) total += c;
  return total;
}

ScaledScalar nu_component(const NuKey& key, int u, NumericMode mode) {
  if (u < 0) throw DomainError("nu_component: u must be non-negative");
  if (u >= key.a) return ScaledScalar::from_integer(0, mode);
  return signed_components(key, mode)[static_cast<std::size_t>(u)];
}

Rational nu_by_enumeration(const NuKey& key) { return TupleEnumerator(key, -1).run(); }

Rational nu_component_by_enumeration(const NuKey& key, int u) {
  if (u < 0) throw DomainError("nu_component_by_enumeration: u must be non-negative");
  return TupleEnumerator(key, u).run();
}

ScaledScalar nu_closed_a1(const Partition& pi, int k, NumericMode mode) {
  return nu_closed_u0(pi, 1, k, mode);
}

ScaledScalar nu_closed_a2_flat(const Partition& pi, int k, NumericMode mode) {
  if (pi.row(2) != 0) throw DomainError("nu_closed_a2_flat: requires pi_2 = 0");
  if (pi.size() < 1) throw DomainError("nu_closed_a2_flat: requires |pi| >= 1");
  if (k < 1) throw DomainError("nu_closed_a2_flat: k must be at least 1");
  const auto p = static_cast<long>(pi.size());
  const ScaledScalar grow = ScaledScalar::from_integer(p + 1, mode).pow(static_cast<std::uint64_t>(k - 1));
  const ScaledScalar one = ScaledScalar::from_integer(1, mode);
  return (one - grow) / (ScaledScalar::from_integer(p, mode) * grow);
}

ScaledScalar nu_closed_u0(const Partition& pi, int a, int k, NumericMode mode) {
  const NuKey key(pi, a, k);
  return ScaledScalar::from_ratio(pi.row(a) + 1, pi.size() + 1, mode)
      .pow(static_cast<std::uint64_t>(k));
}

ScaledScalar NuCache::get(const NuKey& key, NumericMode mode) {
  Table& table = mode == NumericMode::exact ? exact_ : scaled_;
  {
    std::shared_lock lock(mutex_);
    if (auto it = table.find(key); it != table.end()) return it->second;
  }
  ScaledScalar value = nu(key, mode);
  std::unique_lock lock(mutex_);
  table.insert_or_assign(key, value);
  return value;
}

std::size_t NuCache::size() const {
  std::shared_lock lock(mutex_);
  return exact_.size() + scaled_.size();
}

}  // namespace shuffle_spectra
