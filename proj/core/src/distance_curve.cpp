#include "shuffle_spectra/distance_curve.hpp"

#include "shuffle_spectra/errors.hpp"

namespace shuffle_spectra {

std::string_view channel_name(Channel channel) {
  switch (channel) {
    case Channel::l2_upper_sq:
      return "l2_upper_sq";
    case Channel::l2_upper_sq_bounded:
      return "l2_upper_sq_bounded";
    case Channel::l2_lower_sq:
      return "l2_lower_sq";
    case Channel::tv_exact:
      return "tv_exact";
    case Channel::l2_exact:
      return "l2_exact";
    case Channel::mc_lower:
      return "mc_lower";
  }
  return "unknown";
}

void DistanceCurve::append(long t, ScaledScalar value, Channel channel) {
  if (t < 0) throw DomainError("DistanceCurve: t must be non-negative");
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
    if (it->channel != channel) continue;
    if (it->t >= t) {
      throw DomainError("DistanceCurve: t must increase within channel " +
                        std::string(channel_name(channel)));
    }
    break;
  }
  rows_.push_back(CurveRow{t, std::move(value), channel});
}

std::vector<CurveRow> DistanceCurve::channel(Channel channel) const {
  std::vector<CurveRow> out;
  for (const auto& row : rows_) {
    if (row.channel == channel) out.push_back(row);
  }
  return out;
}

const ScaledScalar& DistanceCurve::at(long t, Channel channel) const {
  for (const auto& row : rows_) {
    if (row.channel == channel && row.t == t) return row.value;
  }
  throw DomainError("DistanceCurve: no " + std::string(channel_name(channel)) + " value at t = " +
                    std::to_string(t));
}

}  // namespace shuffle_spectra
