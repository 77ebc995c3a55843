#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "shuffle_spectra/scalar.hpp"

namespace shuffle_spectra {

enum class Channel {
  l2_upper_sq,
  l2_upper_sq_bounded,
  l2_lower_sq,
  tv_exact,
  l2_exact,
  mc_lower,
};

std::string_view channel_name(Channel channel);

struct CurveRow {
  long t = 0;
  ScaledScalar value;
  Channel channel = Channel::tv_exact;
};

/// Distance values against step count, tagged by channel.
///
/// Within each channel, t is strictly increasing. `metadata` records every
/// knob the curve depends on (n, k, truncation level, constants, ...).
class DistanceCurve {
 public:
  /// Throws DomainError if t does not increase within the row's channel.
  void append(long t, ScaledScalar value, Channel channel);

  const std::vector<CurveRow>& rows() const { return rows_; }
  std::vector<CurveRow> channel(Channel channel) const;
  /// The value at step t in `channel`; throws DomainError when absent.
  const ScaledScalar& at(long t, Channel channel) const;

  std::map<std::string, std::string> metadata;

 private:
  std::vector<CurveRow> rows_;
};

}  // namespace shuffle_spectra
