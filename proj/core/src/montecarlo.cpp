#include <algorithm>
#include "shuffle_spectra/montecarlo.hpp"

#include <cmath>

#include "shuffle_spectra/chain.hpp"
#include "shuffle_spectra/errors.hpp"
#include "shuffle_spectra/parallel.hpp"

namespace shuffle_spectra {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

void check_config(const SimConfig& cfg) {
  if (cfg.trials < 1) throw DomainError("SimConfig: trials must be at least 1");
  if (cfg.t < 0) throw DomainError("SimConfig: t must be non-negative");
  if (cfg.k < 1) throw DomainError("SimConfig: k must be at least 1");
}

}  // namespace

std::mt19937_64 trial_stream(std::uint64_t seed, std::uint64_t trial) {
  return std::mt19937_64(splitmix64(splitmix64(seed) ^ trial));
}

Generator sample_generator(int n, int k, std::mt19937_64& stream) {
  if (n < 1 || k < 1) throw DomainError("sample_generator: need n >= 1 and k >= 1");
  Generator out;
  out.j = std::uniform_int_distribution<int>(1, n)(stream);
  std::uniform_int_distribution<int> pick(1, out.j);
  out.switches.resize(static_cast<std::size_t>(k));
  for (int& i : out.switches) i = pick(stream);
  return out;
}

int watched_block(int n, int k, bool floor_block) {
  if (n < 3) throw DomainError("watched_block: n must be at least 3");
  if (k < 1) throw DomainError("watched_block: k must be at least 1");
  const double ratio = n / (k * std::log(n));
  const double v = floor_block ? std::floor(ratio) : std::ceil(ratio);
  if (v < 1.0) throw DomainError("watched_block: the watched block is empty");
  return static_cast<int>(std::min<double>(v, n));
}

Estimate untouched_statistic(const SimConfig& cfg) {
  check_config(cfg);
  const int n = cfg.n;
  const int v = watched_block(n, cfg.k, cfg.floor_block);
  const int first_watched = n - v + 1;
  std::vector<char> hit(static_cast<std::size_t>(cfg.trials), 0);
  parallel_for(
      hit.size(),
      [&](std::size_t trial) {
        std::mt19937_64 stream = trial_stream(cfg.seed, trial);
        std::vector<char> touched(static_cast<std::size_t>(n) + 1, 0);
        int untouched = v;
        const auto touch = [&](int position) {
          if (position >= first_watched && !touched[static_cast<std::size_t>(position)]) {
            touched[static_cast<std::size_t>(position)] = 1;
            --untouched;
          }
        };
        for (long step = 0; step < cfg.t && untouched > 0; ++step) {
          const Generator g = sample_generator(n, cfg.k, stream);
          touch(g.j);
          for (int i : g.switches) touch(i);
        }
        hit[trial] = untouched > 0 ? 1 : 0;
      },
      cfg.threads);

  long count = 0;
  for (char h : hit) count += h;
  Estimate out;
  out.trials = cfg.trials;
  out.estimate = static_cast<double>(count) / static_cast<double>(cfg.trials);
  out.standard_error = std::sqrt(out.estimate * (1.0 - out.estimate) / static_cast<double>(cfg.trials));
  return out;
}

Rational u_bn(int n, int v) {
  if (n < 1 || v < 1 || v > n) throw DomainError("u_bn: need 1 <= v <= n");
  BigInt n_factorial;
  mpz_fac_ui(n_factorial.get_mpz_t(), static_cast<unsigned long>(n));
  BigInt none = 0;
  for (int j = 0; j <= v; ++j) {
    BigInt binom;
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(v), static_cast<unsigned long>(j));
    BigInt rest;
    mpz_fac_ui(rest.get_mpz_t(), static_cast<unsigned long>(n - j));
    if (j % 2 == 0) {
      none += binom * rest;
    } else {
      none -= binom * rest;
    }
  }
  Rational out(n_factorial - none, n_factorial);
  out.canonicalize();
  return out;
}

Estimate tv_lower_estimate(const SimConfig& cfg) {
  Estimate out = untouched_statistic(cfg);
  const Rational reference = u_bn(cfg.n, watched_block(cfg.n, cfg.k, cfg.floor_block));
  out.estimate -= reference.get_d();
  out.exact_reference = reference;
  return out;
}

long empirical_tmix(int n, int k, double eps) {
  if (!(eps > 0.0 && eps < 1.0)) throw DomainError("empirical_tmix: eps must lie in (0, 1)");
  if (n > kMaxMatrixSize) {
    throw ResourceError("empirical_tmix: n = " + std::to_string(n) + " exceeds the limit n <= " +
                        std::to_string(kMaxMatrixSize));
  }
  constexpr long kMaxHorizon = 1L << 20;
  for (long horizon = 16; horizon <= kMaxHorizon; horizon *= 4) {
    const DistanceCurve curve = exact_distances(n, k, horizon, NumericMode::scaled);
    const auto tv = curve.channel(Channel::tv_exact);
    const auto it = std::partition_point(tv.begin(), tv.end(),
                                         [&](const CurveRow& row) { return row.value.to_double() > eps; });
    if (it != tv.end()) return it->t;
  }
  throw NumericError("empirical_tmix: TV did not reach eps within " + std::to_string(kMaxHorizon) + " steps");
}

}  // namespace shuffle_spectra
