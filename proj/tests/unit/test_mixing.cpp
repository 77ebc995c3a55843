#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "shuffle_spectra/chain.hpp"
#include "shuffle_spectra/errors.hpp"
#include "shuffle_spectra/mixing.hpp"
#include "shuffle_spectra/spectrum.hpp"

namespace ss = shuffle_spectra;

namespace {

ss::Rational q(long num, long den = 1) {
  ss::Rational out(num, den);
  out.canonicalize();
  return out;
}

std::vector<long> range(long lo, long hi) {
  std::vector<long> out;
  for (long t = lo; t <= hi; ++t) out.push_back(t);
  return out;
}

}  // namespace

TEST(Thresholds, Examples) {
  const double ln100 = std::log(100.0);
  EXPECT_NEAR(ss::general_upper(100, 2), 660.517, 1e-3);
  EXPECT_NEAR(ss::gamma_upper(100, 1.0, 2), 50 * ln100 + 200, 1e-9);
  EXPECT_NEAR(ss::gamma_upper(100, 0.5, 0), 0.75 * 100 * ln100, 1e-9);
  EXPECT_NEAR(ss::l2_lower_general(100, 1), 50 * ln100 - 100, 1e-9);
  EXPECT_NEAR(ss::l2_lower_gamma(100, 1.0, 0), 50 * ln100 - 50 * std::log(ln100), 1e-9);
  EXPECT_NEAR(ss::tv_lower(100, 1, 5), -192.20, 5e-3);
  EXPECT_NEAR(ss::large_k_order(100, 2), 800, 1e-12);
}

TEST(Thresholds, SetMatchesParts) {
  const auto set = ss::thresholds(500, 22, 0.5, 3, 1.5);
  EXPECT_EQ(set.general_upper, ss::general_upper(500, 3));
  EXPECT_EQ(set.gamma_upper, ss::gamma_upper(500, 0.5, 3));
  EXPECT_EQ(set.l2_lower_general, ss::l2_lower_general(500, 3));
  EXPECT_EQ(set.l2_lower_gamma, ss::l2_lower_gamma(500, 0.5, 3));
  EXPECT_EQ(set.tv_lower, ss::tv_lower(500, 22, 3));
  EXPECT_EQ(set.large_k_order, ss::large_k_order(500, 1.5));
}

TEST(Thresholds, OrderingAcrossN) {
  for (int n = 3; n <= 5000; n = n * 3 / 2 + 1) {
    for (double c : {0.0, 1.0, 4.0}) {
      EXPECT_LE(ss::l2_lower_general(n, c), ss::general_upper(n, c));
      EXPECT_LE(ss::gamma_upper(n, 1.0, c), ss::general_upper(n, c));
      EXPECT_LE(ss::l2_lower_gamma(n, 1.0, c), ss::gamma_upper(n, 1.0, c));
      EXPECT_LE(ss::tv_lower(n, 1.0, c), ss::general_upper(n, c));
    }
  }
}

TEST(Thresholds, DomainErrors) {
  EXPECT_THROW(ss::general_upper(2, 0), ss::DomainError);
  EXPECT_THROW(ss::gamma_upper(10, 0.0, 0), ss::DomainError);
  EXPECT_THROW(ss::gamma_upper(10, 1.5, 0), ss::DomainError);
  EXPECT_THROW(ss::thresholds(10, 1, 1.01, 0, 1), ss::DomainError);
}

TEST(TvLowerAsymptotic, Examples) {
  EXPECT_NEAR(ss::tv_lower_asymptotic(8), 0.8972, 5e-5);
  EXPECT_NEAR(ss::tv_lower_asymptotic(4 + std::numbers::pi / std::sqrt(6.0)), 0.0, 1e-12);
  EXPECT_THROW(ss::tv_lower_asymptotic(4), ss::DomainError);
  EXPECT_THROW(ss::tv_lower_asymptotic(1), ss::DomainError);
  double previous = -1e300;
  for (double c = 4.5; c < 40; c += 0.5) {
    const double value = ss::tv_lower_asymptotic(c);
    EXPECT_GT(value, previous);
    EXPECT_LT(value, 1.0);
    previous = value;
  }
}

TEST(L2UpperSq, Examples) {
  for (int n = 1; n <= 6; ++n) {
    const auto curve = ss::l2_upper_sq(n, 2, {0}, ss::NumericMode::exact);
    EXPECT_EQ(curve.at(0, ss::Channel::l2_upper_sq).rational(),
              ss::Rational(static_cast<long>(ss::factorial(n))) - 1);
  }
  EXPECT_EQ(ss::l2_upper_sq(2, 1, {1}, ss::NumericMode::exact).at(1, ss::Channel::l2_upper_sq).rational(), q(1, 4));
  EXPECT_EQ(ss::l2_upper_sq(3, 1, {1}, ss::NumericMode::exact).at(1, ss::Channel::l2_upper_sq).rational(), q(14, 9));
  const auto curve = ss::l2_upper_sq(4, 1, {0, 3});
  EXPECT_EQ(curve.metadata.at("n"), "4");
  EXPECT_TRUE(curve.metadata.count("max_abs_eig"));
}

TEST(L2UpperSq, EqualsExactChiSquareForSingleSwitch) {
  for (int n = 2; n <= 5; ++n) {
    const auto grid = range(0, 10);
    const auto formula = ss::l2_upper_sq(n, 1, grid, ss::NumericMode::exact);
    const auto chain = ss::exact_distances(n, 1, 10, ss::NumericMode::exact);
    for (long t : grid) {
      EXPECT_EQ(formula.at(t, ss::Channel::l2_upper_sq).rational(), chain.at(t, ss::Channel::l2_exact).rational())
          << n << " t=" << t;
    }
  }
}

TEST(L2UpperSq, ScaledTracksExactAndDecreases) {
  const auto grid = std::vector<long>{0, 1, 5, 20, 100};
  const auto exact = ss::l2_upper_sq(7, 3, grid, ss::NumericMode::exact);
  const auto scaled = ss::l2_upper_sq(7, 3, grid);
  double previous = 1e300;
  for (long t : grid) {
    const double value = scaled.at(t, ss::Channel::l2_upper_sq).to_double();
    EXPECT_NEAR(value, exact.at(t, ss::Channel::l2_upper_sq).to_double(), 1e-10 * std::max(1.0, value));
    EXPECT_LE(value, previous);
    previous = value;
  }
}

TEST(L2UpperSq, GridValidation) {
  EXPECT_THROW(ss::l2_upper_sq(4, 1, {3, 3}), ss::DomainError);
  EXPECT_THROW(ss::l2_upper_sq(4, 1, {-1}), ss::DomainError);
  EXPECT_THROW(ss::l2_upper_sq(15, 1, {1}), ss::ResourceError);
}

TEST(L2LowerSq, Examples) {
  for (int n = 2; n <= 40; n += 7) {
    const auto curve = ss::l2_lower_sq(n, 3, {0}, ss::NumericMode::exact);
    EXPECT_EQ(curve.at(0, ss::Channel::l2_lower_sq).rational(), ss::Rational((n - 1) * (n - 1)));
  }
  EXPECT_EQ(ss::l2_lower_sq(3, 1, {1}, ss::NumericMode::exact).at(1, ss::Channel::l2_lower_sq).rational(), q(122, 81));
}

TEST(L2LowerSq, BelowUpper) {
  for (int n = 2; n <= 7; ++n) {
    for (int k : {1, 3}) {
      const auto grid = std::vector<long>{0, 1, 2, 7, 30};
      const auto upper = ss::l2_upper_sq(n, k, grid, ss::NumericMode::exact);
      const auto lower = ss::l2_lower_sq(n, k, grid, ss::NumericMode::exact);
      for (long t : grid) {
        EXPECT_LE(lower.at(t, ss::Channel::l2_lower_sq).rational(), upper.at(t, ss::Channel::l2_upper_sq).rational());
      }
    }
  }
}

TEST(L2LowerSq, LargeDeckStaysFinite) {
  const auto curve = ss::l2_lower_sq(2000, 4, {0, 20000, 200000});
  const double at_mid = curve.at(20000, ss::Channel::l2_lower_sq).to_double();
  EXPECT_GT(at_mid, 0.0);
  EXPECT_LT(at_mid, 1999.0 * 1999.0);
  EXPECT_GT(curve.at(200000, ss::Channel::l2_lower_sq).scaled().log_abs(), -1e6);
}

TEST(L2UpperSqBounded, SmallStrata) {
  const auto one = ss::l2_upper_sq_bounded(3, 1, {0, 1}, 1);
  ASSERT_EQ(one.strata.size(), 4U);
  EXPECT_EQ(one.strata[0].m, 1);
  EXPECT_DOUBLE_EQ(one.strata[0].value.to_double(), 9.0);
  EXPECT_EQ(one.strata[1].m, 0);
  EXPECT_DOUBLE_EQ(one.strata[1].value.to_double(), 6.0);
  EXPECT_DOUBLE_EQ(one.strata[2].value.to_double(), 4.0);
  EXPECT_NEAR(one.strata[3].value.to_double(), 6.0 * std::exp(-2.0), 1e-14);
  EXPECT_DOUBLE_EQ(one.curve.at(0, ss::Channel::l2_upper_sq_bounded).to_double(), 15.0);

  const auto full = ss::l2_upper_sq_bounded(3, 1, {0}, 2);
  for (const auto& row : full.strata) EXPECT_NE(row.m, 0);
  EXPECT_DOUBLE_EQ(full.curve.at(0, ss::Channel::l2_upper_sq_bounded).to_double(), 9.0 + 40.5);
}

TEST(L2UpperSqBounded, StrataSumToCurveAndDecrease) {
  const std::vector<long> grid{0, 500, 3000, 6000};
  const auto bounded = ss::l2_upper_sq_bounded(500, 1, grid, 20, 1.0);
  double previous = std::numeric_limits<double>::infinity();
  for (long t : grid) {
    ss::ExpFloat total = ss::ExpFloat::from_double(0.0);
    for (const auto& row : bounded.strata) {
      if (row.t == t) total += row.value.scaled();
    }
    const auto value = bounded.curve.at(t, ss::Channel::l2_upper_sq_bounded).scaled();
    EXPECT_NEAR(total.log_abs(), value.log_abs(), 1e-9 * std::max(1.0, std::fabs(value.log_abs())));
    EXPECT_LT(value.log_abs(), previous);
    previous = value.log_abs();
  }
}

TEST(L2UpperSqBounded, Validation) {
  EXPECT_THROW(ss::l2_upper_sq_bounded(5, 1, {0}, 0), ss::DomainError);
  EXPECT_THROW(ss::l2_upper_sq_bounded(5, 1, {0}, 5), ss::DomainError);
  EXPECT_THROW(ss::l2_upper_sq_bounded(5, 1, {2, 1}, 2), ss::DomainError);
}
