#include <gtest/gtest.h>

#include <cmath>
#include <thread>

#include "shuffle_spectra/errors.hpp"
#include "shuffle_spectra/spectrum.hpp"

namespace ss = shuffle_spectra;

namespace {

constexpr auto kExact = ss::NumericMode::exact;

ss::Rational q(long num, long den = 1) {
  ss::Rational out(num, den);
  out.canonicalize();
  return out;
}

ss::Rational exact(const ss::ScaledScalar& x) { return x.rational(); }

// Sums over non-increasing tuples (a, x_1, ..., x_l), 0 <= l <= k, with values
// in [1, a]. Every tuple is walked one at a time.
class TupleOracle {
 public:
  TupleOracle(const ss::Partition& pi, int a, int k) : pi_(pi), a_(a), k_(k) {}

  ss::Rational value(int only_u = -1) {
    only_u_ = only_u;
    ss::Rational total = 0;
    for (int l = 0; l <= k_; ++l) {
      ss::BigInt binom;
      mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(k_), static_cast<unsigned long>(l));
      sum_ = 0;
      tuple_.assign(1, a_);
      extend(l);
      total += ss::Rational(binom * sum_);
    }
    ss::BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), static_cast<unsigned long>(pi_.size() + 1), static_cast<unsigned long>(k_));
    return total / ss::Rational(scale);
  }

 private:
  void extend(int remaining) {
    if (remaining == 0) {
      score();
      return;
    }
    for (int x = tuple_.back(); x >= 1; --x) {
      tuple_.push_back(x);
      extend(remaining - 1);
      tuple_.pop_back();
    }
  }

  void score() {
    std::vector<int> count(static_cast<std::size_t>(a_) + 1, 0);
    for (int x : tuple_) ++count[static_cast<std::size_t>(x)];
    int u = 0;
    ss::BigInt term = 1;
    for (int i = 1; i <= a_; ++i) {
      const int c = count[static_cast<std::size_t>(i)];
      if (i < a_ && c > 0) ++u;
      if (c > 1) {
        ss::BigInt power;
        mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(pi_.row(i)), static_cast<unsigned long>(c - 1));
        term *= power;
      } else if (c == 1 || i == a_) {
        // d_i = 0 contributes pi_i^0 = 1, including 0^0.
      }
    }
    if (only_u_ >= 0 && u != only_u_) return;
    sum_ += (u % 2 == 0) ? term : ss::BigInt(-term);
  }

  ss::Partition pi_;
  int a_;
  int k_;
  int only_u_ = -1;
  std::vector<int> tuple_;
  ss::BigInt sum_;
};

std::vector<ss::Partition> partitions_up_to(int max_size) {
  std::vector<ss::Partition> out{ss::Partition()};
  for (int p = 1; p <= max_size; ++p) {
    for (auto& pi : ss::enumerate_partitions(p)) out.push_back(std::move(pi));
  }
  return out;
}

ss::GrowthSequence hook_tableau(int n, int i) {
  std::vector<int> rows(static_cast<std::size_t>(n), 1);
  rows[static_cast<std::size_t>(i - 1)] = 2;
  return ss::GrowthSequence(std::move(rows));
}

}  // namespace

TEST(Nu, Examples) {
  for (int k : {1, 2, 5}) EXPECT_EQ(exact(ss::nu(ss::NuKey(ss::Partition(), 1, k), kExact)), 1);
  EXPECT_EQ(exact(ss::nu(ss::NuKey(ss::Partition({1}), 1, 2), kExact)), 1);
  EXPECT_EQ(exact(ss::nu(ss::NuKey(ss::Partition({1}), 2, 2), kExact)), q(-1, 2));
  EXPECT_EQ(exact(ss::nu(ss::NuKey(ss::Partition({1, 1}), 3, 2), kExact)), q(-4, 9));
}

TEST(Nu, RejectsBadKeys) {
  EXPECT_THROW(ss::NuKey(ss::Partition({2, 1}), 4, 1), ss::DomainError);
  EXPECT_THROW(ss::NuKey(ss::Partition({2, 1}), 0, 1), ss::DomainError);
  EXPECT_THROW(ss::NuKey(ss::Partition({2, 1}), 1, 0), ss::DomainError);
}

TEST(Nu, MatchesTupleOracle) {
  for (const auto& pi : partitions_up_to(6)) {
    for (int a = 1; a <= pi.length() + 1; ++a) {
      for (int k = 1; k <= 4; ++k) {
        const ss::NuKey key(pi, a, k);
        TupleOracle oracle(pi, a, k);
        EXPECT_EQ(exact(ss::nu(key, kExact)), oracle.value()) << pi.to_string() << " a=" << a << " k=" << k;
        EXPECT_EQ(ss::nu_by_enumeration(key), oracle.value());
        for (int u = 0; u < a; ++u) {
          EXPECT_EQ(exact(ss::nu_component(key, u, kExact)), oracle.value(u));
          EXPECT_EQ(ss::nu_component_by_enumeration(key, u), oracle.value(u));
        }
      }
    }
  }
}

TEST(Nu, ScaledModeAgreesWithExact) {
  for (const auto& pi : partitions_up_to(7)) {
    for (int a = 1; a <= pi.length() + 1; ++a) {
      for (int k : {1, 3, 9}) {
        const ss::NuKey key(pi, a, k);
        EXPECT_TRUE(ss::approx_equal(ss::nu(key, ss::NumericMode::scaled), ss::nu(key, kExact), 1e-12))
            << pi.to_string() << " a=" << a << " k=" << k;
      }
    }
  }
}

TEST(Nu, LargeExponentStaysFinite) {
  const ss::NuKey key(ss::Partition({5, 3, 2}), 2, 3000);
  const ss::Rational reference = exact(ss::nu(key, kExact));
  ASSERT_NE(reference, 0);
  long num_exp = 0;
  long den_exp = 0;
  const double num_mant = mpz_get_d_2exp(&num_exp, reference.get_num_mpz_t());
  const double den_mant = mpz_get_d_2exp(&den_exp, reference.get_den_mpz_t());
  const double expected_log =
      std::log(std::fabs(num_mant)) - std::log(den_mant) + static_cast<double>(num_exp - den_exp) * std::log(2.0);
  const auto value = ss::nu(key, ss::NumericMode::scaled);
  EXPECT_LT(expected_log, -1000.0);
  EXPECT_NEAR(value.scaled().log_abs(), expected_log, 1e-9 * std::fabs(expected_log));
  EXPECT_EQ(value.sign(), sgn(reference));
}

TEST(NuComponent, Examples) {
  const ss::NuKey key(ss::Partition({1}), 2, 2);
  EXPECT_EQ(exact(ss::nu_component(key, 0, kExact)), q(1, 4));
  EXPECT_EQ(exact(ss::nu_component(key, 1, kExact)), q(-3, 4));
  EXPECT_EQ(exact(ss::nu_component(key, 2, kExact)), 0);
  EXPECT_EQ(exact(ss::nu_component(key, 7, kExact)), 0);
  EXPECT_THROW(ss::nu_component(key, -1, kExact), ss::DomainError);
}

TEST(NuComponent, SumsToNuAndAlternateInSign) {
  for (const auto& pi : partitions_up_to(8)) {
    for (int a = 1; a <= pi.length() + 1; ++a) {
      for (int k = 1; k <= 6; ++k) {
        const ss::NuKey key(pi, a, k);
        const auto parts = ss::nu_components(key, kExact);
        ASSERT_EQ(parts.size(), static_cast<std::size_t>(a));
        ss::Rational total = 0;
        for (int u = 0; u < a; ++u) {
          const ss::Rational value = exact(parts[static_cast<std::size_t>(u)]);
          total += value;
          EXPECT_TRUE(u % 2 == 0 ? value >= 0 : value <= 0);
        }
        EXPECT_EQ(total, exact(ss::nu(key, kExact)));
      }
    }
  }
}

TEST(NuComponent, MagnitudeBoundHoldsForFirstTwoRows) {
  for (const auto& pi : partitions_up_to(8)) {
    if (pi.size() == 0) continue;
    for (int a = 1; a <= std::min(2, pi.length() + 1); ++a) {
      for (int k = 1; k <= 6; ++k) {
        const auto parts = ss::nu_components(ss::NuKey(pi, a, k), kExact);
        for (int u = 0; u < a; ++u) {
          ss::BigInt scale;
          mpz_ui_pow_ui(scale.get_mpz_t(), static_cast<unsigned long>(pi.size()), static_cast<unsigned long>(u));
          EXPECT_LE(abs(exact(parts[static_cast<std::size_t>(u)])), ss::Rational(1, scale));
        }
      }
    }
  }
}

TEST(NuComponent, MagnitudeBoundFailsFromRowThree) {
  // Two value sets {1} and {2} below a = 3 give the same unit monomial.
  const auto parts = ss::nu_components(ss::NuKey(ss::Partition({1, 1}), 3, 1), kExact);
  EXPECT_EQ(exact(parts[1]), q(-2, 3));
  const auto wider = ss::nu_components(ss::NuKey(ss::Partition({2, 1, 1}), 3, 1), kExact);
  EXPECT_EQ(exact(wider[1]), q(-2, 5));
}

TEST(ClosedForms, Examples) {
  EXPECT_EQ(exact(ss::nu_closed_a2_flat(ss::Partition({1}), 1, kExact)), 0);
  EXPECT_EQ(exact(ss::nu_closed_a2_flat(ss::Partition({1}), 2, kExact)), q(-1, 2));
  EXPECT_EQ(exact(ss::nu_closed_a1(ss::Partition({3}), 2, kExact)), 1);
  EXPECT_EQ(exact(ss::nu_closed_u0(ss::Partition({2, 1}), 2, 3, kExact)), q(1, 8));
  EXPECT_THROW(ss::nu_closed_a2_flat(ss::Partition({2, 1}), 2, kExact), ss::DomainError);
  EXPECT_THROW(ss::nu_closed_a2_flat(ss::Partition(), 2, kExact), ss::DomainError);
}

TEST(ClosedForms, AgreeWithSeries) {
  for (const auto& pi : partitions_up_to(9)) {
    for (int k = 1; k <= 6; ++k) {
      EXPECT_EQ(exact(ss::nu(ss::NuKey(pi, 1, k), kExact)), exact(ss::nu_closed_a1(pi, k, kExact)));
      if (pi.row(2) == 0 && pi.size() >= 1) {
        EXPECT_EQ(exact(ss::nu(ss::NuKey(pi, 2, k), kExact)), exact(ss::nu_closed_a2_flat(pi, k, kExact)));
      }
      for (int a = 1; a <= pi.length() + 1; ++a) {
        EXPECT_EQ(exact(ss::nu_component(ss::NuKey(pi, a, k), 0, kExact)), exact(ss::nu_closed_u0(pi, a, k, kExact)));
      }
    }
  }
}

TEST(Eigenvalue, Examples) {
  for (int n : {1, 4, 9}) {
    EXPECT_EQ(exact(ss::eigenvalue(ss::GrowthSequence(std::vector<int>(static_cast<std::size_t>(n), 1)), 3, kExact)), 1);
  }
  const ss::GrowthSequence column({1, 2});
  EXPECT_EQ(exact(ss::eigenvalue(column, 1, kExact)), q(1, 2));
  EXPECT_EQ(exact(ss::eigenvalue(column, 2, kExact)), q(1, 4));
  EXPECT_EQ(exact(ss::eigenvalue(ss::GrowthSequence({1, 2, 1}), 2, kExact)), q(17, 54));
  EXPECT_THROW(ss::eigenvalue(ss::GrowthSequence(), 1, kExact), ss::DomainError);
}

TEST(Eigenvalue, CacheIsTransparent) {
  ss::NuCache cache;
  for (const auto& shape : ss::enumerate_partitions(6)) {
    for (const auto& t : ss::enumerate_growth_sequences(shape)) {
      EXPECT_EQ(ss::eigenvalue(t, 3, kExact, &cache), ss::eigenvalue(t, 3, kExact));
    }
  }
  EXPECT_GT(cache.size(), 0U);
}

TEST(NuCache, ConcurrentReadersAgree) {
  ss::NuCache cache;
  const ss::NuKey key(ss::Partition({3, 2, 1}), 3, 5);
  const ss::ScaledScalar expected = ss::nu(key, kExact);
  std::vector<std::thread> workers;
  std::vector<ss::ScaledScalar> seen(8);
  for (std::size_t i = 0; i < seen.size(); ++i) {
    workers.emplace_back([&, i] { seen[i] = cache.get(key, kExact); });
  }
  for (auto& w : workers) w.join();
  for (const auto& value : seen) EXPECT_EQ(value, expected);
  EXPECT_EQ(cache.size(), 1U);
}

TEST(FDecomposition, Examples) {
  const auto row = ss::f_decomposition(ss::GrowthSequence({1, 1, 1}), 4, kExact);
  EXPECT_EQ(exact(row.f0), 1);
  EXPECT_EQ(exact(row.f_plus), 0);
  const auto a = ss::f_decomposition(ss::GrowthSequence({1, 1, 2}), 1, kExact);
  EXPECT_EQ(exact(a.f0), q(7, 9));
  EXPECT_EQ(exact(a.f_plus), q(-1, 9));
  const auto b = ss::f_decomposition(ss::GrowthSequence({1, 2, 1}), 1, kExact);
  EXPECT_EQ(exact(b.f0), q(13, 18));
  EXPECT_EQ(exact(b.f_plus), q(-1, 6));
}

TEST(FDecomposition, MainTermIsTheZeroComponentSum) {
  for (const auto& shape : ss::enumerate_partitions(6)) {
    for (const auto& t : ss::enumerate_growth_sequences(shape)) {
      for (int k : {1, 2, 5}) {
        ss::Rational total = 0;
        ss::Partition prefix;
        for (int row : t.rows()) {
          total += exact(ss::nu_closed_u0(prefix, row, k, kExact));
          prefix = prefix.with_box(row);
        }
        EXPECT_EQ(exact(ss::f0(t, k, kExact)), total / 6);
      }
    }
  }
}

TEST(FirstRowHook, Examples) {
  EXPECT_EQ(exact(ss::first_row_hook_eig(3, 3, 1, kExact)), q(2, 3));
  EXPECT_EQ(exact(ss::first_row_hook_eig(2, 3, 1, kExact)), q(5, 9));
  EXPECT_EQ(exact(ss::first_row_hook_eig(3, 3, 2, kExact)), q(5, 9));
  EXPECT_THROW(ss::first_row_hook_eig(1, 3, 1, kExact), ss::DomainError);
  EXPECT_THROW(ss::first_row_hook_eig(4, 3, 1, kExact), ss::DomainError);
}

TEST(FirstRowHook, MatchesGenericEigenvalue) {
  for (int n = 2; n <= 8; ++n) {
    for (int k = 1; k <= 5; ++k) {
      const auto all = ss::first_row_hook_spectrum(n, k, kExact);
      for (int i = 2; i <= n; ++i) {
        const auto value = ss::first_row_hook_eig(i, n, k, kExact);
        EXPECT_EQ(value, ss::eigenvalue(hook_tableau(n, i), k, kExact)) << n << " " << k << " " << i;
        EXPECT_EQ(value, all[static_cast<std::size_t>(i - 2)]);
        EXPECT_TRUE(ss::approx_equal(ss::first_row_hook_eig(i, n, k, ss::NumericMode::scaled), value, 1e-12));
      }
    }
  }
}

TEST(FirstRowHook, TwoSidedBound) {
  for (int n = 3; n <= 30; ++n) {
    for (int k : {1, 2, 8, 64}) {
      const ss::Rational value = exact(ss::first_row_hook_eig(n, n, k, kExact));
      EXPECT_GE(value, 1 - q(1, n - 1));
      EXPECT_LE(value, 1 - q(1, n));
    }
  }
}

TEST(TArrow, Examples) {
  EXPECT_EQ(ss::t_arrow(ss::Partition({6, 4, 2}), 4).tableau().rows(),
            (std::vector<std::vector<int>>{{1, 2, 3, 5, 6, 7}, {4, 8, 9, 10}, {11, 12}}));
  EXPECT_EQ(ss::t_arrow(ss::Partition({2, 1}), 2).tableau().rows(), (std::vector<std::vector<int>>{{1, 3}, {2}}));
  EXPECT_EQ(ss::t_arrow(ss::Partition({2, 1}), 3).tableau().rows(), (std::vector<std::vector<int>>{{1, 2}, {3}}));
  EXPECT_THROW(ss::t_arrow(ss::Partition({2, 1}), 4), ss::DomainError);
  EXPECT_THROW(ss::t_arrow(ss::Partition({2, 1}), 1), ss::DomainError);
  EXPECT_THROW(ss::t_arrow(ss::Partition({3}), 2), ss::DomainError);
}

TEST(TArrow, MaximizesMainTerm) {
  for (int n = 3; n <= 8; ++n) {
    for (const auto& shape : ss::enumerate_partitions(n)) {
      if (shape.length() < 2) continue;
      const auto reference = ss::Partition::stacked_rows(n, shape.row(1));
      for (const auto& t : ss::enumerate_growth_sequences(shape)) {
        for (int k = 1; k <= 3; ++k) {
          EXPECT_LE(ss::f0(t, k, kExact), ss::f0(ss::t_arrow(reference, t.second_row_start()), k, kExact));
        }
      }
    }
  }
}

TEST(RavenBound, Examples) {
  EXPECT_NEAR(ss::raven_bound(10, 2), 0.81, 1e-15);
  EXPECT_NEAR(ss::raven_bound(10, 8), 0.425, 1e-15);
  EXPECT_NEAR(ss::raven_bound(10, 9), 0.1 + 8.0 / 30.0, 1e-15);
  EXPECT_NEAR(ss::raven_bound(10, 2, 3.0), 0.84, 1e-15);
  EXPECT_THROW(ss::raven_bound(10, 0), ss::DomainError);
  EXPECT_THROW(ss::raven_bound(10, 10), ss::DomainError);
}

TEST(FormulaSpectrum, CanonicalOrderAndCounts) {
  const long involutions[] = {1, 1, 2, 4, 10, 26, 76, 232, 764};
  for (int n = 1; n <= 8; ++n) {
    ss::SpectrumOptions options;
    const auto spectrum = ss::formula_spectrum(n, 2, options);
    EXPECT_EQ(static_cast<long>(spectrum.size()), involutions[n]);
    EXPECT_EQ(spectrum.front().shape, ss::Partition::single_row(n));
    EXPECT_EQ(exact(spectrum.front().eigenvalue), 1);
  }
  EXPECT_THROW(ss::formula_spectrum(15, 1, {}), ss::ResourceError);
  EXPECT_THROW(ss::formula_spectrum(0, 1, {}), ss::DomainError);
}

TEST(FormulaSpectrum, DeterministicAcrossThreadsAndCache) {
  ss::SpectrumOptions base;
  base.mode = ss::NumericMode::scaled;
  base.threads = 1;
  base.with_decomposition = true;
  const auto reference = ss::formula_spectrum(9, 3, base);
  ss::SpectrumOptions other = base;
  other.threads = 4;
  other.use_cache = false;
  const auto again = ss::formula_spectrum(9, 3, other);
  ASSERT_EQ(reference.size(), again.size());
  for (std::size_t i = 0; i < reference.size(); ++i) {
    EXPECT_EQ(reference[i].tableau, again[i].tableau);
    EXPECT_EQ(reference[i].eigenvalue.scaled(), again[i].eigenvalue.scaled());
    EXPECT_EQ(reference[i].f0.scaled(), again[i].f0.scaled());
  }
}

TEST(FormulaSpectrum, ScaledTracksExact) {
  ss::SpectrumOptions exact_options;
  ss::SpectrumOptions scaled_options;
  scaled_options.mode = ss::NumericMode::scaled;
  const auto a = ss::formula_spectrum(7, 4, exact_options);
  const auto b = ss::formula_spectrum(7, 4, scaled_options);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_NEAR(a[i].eigenvalue.to_double(), b[i].eigenvalue.to_double(), 1e-12);
  }
}

TEST(DefaultMode, DeskScaleIsExact) {
  EXPECT_EQ(ss::default_mode(10, 16), ss::NumericMode::exact);
  EXPECT_EQ(ss::default_mode(11, 1), ss::NumericMode::scaled);
  EXPECT_EQ(ss::default_mode(5, 17), ss::NumericMode::scaled);
}
