#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "shuffle_spectra/scalar.hpp"

namespace shuffle_spectra {

enum class Statistic { untouched, tv_lower };

struct SimConfig {
  int n = 0;
  int k = 1;
  long t = 0;
  long trials = 1;
  std::uint64_t seed = 0;
  Statistic statistic = Statistic::untouched;
  /// Size the watched block as floor(n / m) instead of ceil(n / m).
  bool floor_block = false;
  unsigned threads = 0;
};

struct Estimate {
  double estimate = 0.0;
  double standard_error = 0.0;
  long trials = 0;
  std::optional<Rational> exact_reference;
};

/// One sampled step (j; i_1, ..., i_k).
struct Generator {
  int j = 1;
  std::vector<int> switches;
};

/// Independent stream for a trial, derived from (seed, trial) by splitmix64.
std::mt19937_64 trial_stream(std::uint64_t seed, std::uint64_t trial);

Generator sample_generator(int n, int k, std::mt19937_64& stream);

/// Number of watched top positions, ceil(n / (k ln n)) (or the floor).
/// DomainError for n < 3 or an empty block.
int watched_block(int n, int k, bool floor_block = false);

/// Fraction of trials in which some position among the top v is never
/// hit by j or any switch over t steps.
Estimate untouched_statistic(const SimConfig& cfg);

/// Chance that a uniform permutation of [n] fixes one of v given positions.
Rational u_bn(int n, int v);

/// untouched_statistic minus u_bn(n, v); exact_reference holds u_bn.
Estimate tv_lower_estimate(const SimConfig& cfg);

/// Smallest t with exact TV(t) <= eps. ResourceError for n > 7.
long empirical_tmix(int n, int k, double eps);

}  // namespace shuffle_spectra
