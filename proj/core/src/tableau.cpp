#include <algorithm>

#include "shuffle_spectra/combinatorics.hpp"
#include "shuffle_spectra/errors.hpp"

namespace shuffle_spectra {

Partition Tableau::shape() const {
  std::vector<int> parts;
  parts.reserve(rows_.size());
  for (const auto& row : rows_) parts.push_back(static_cast<int>(row.size()));
  return Partition(std::move(parts));
}

GrowthSequence::GrowthSequence(std::vector<int> rows) : rows_(std::move(rows)) {
  std::vector<int> fill;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const int r = rows_[i];
    if (r < 1 || r > static_cast<int>(fill.size()) + 1) {
      throw DomainError("GrowthSequence: step " + std::to_string(i) + " uses invalid row " +
                        std::to_string(r));
    }
    const auto idx = static_cast<std::size_t>(r - 1);
    if (idx == fill.size()) fill.push_back(0);
    if (idx > 0 && fill[idx - 1] <= fill[idx]) {
      throw DomainError("GrowthSequence: step " + std::to_string(i) + " breaks the shape in row " +
                        std::to_string(r));
    }
    ++fill[idx];
  }
  shape_ = Partition(std::move(fill));
}

GrowthSequence GrowthSequence::from_tableau(const Tableau& tableau) {
  const Partition shape = tableau.shape();
  std::vector<int> rows(static_cast<std::size_t>(shape.size()), 0);
  for (std::size_t i = 0; i < tableau.rows().size(); ++i) {
    for (int entry : tableau.rows()[i]) {
      if (entry < 1 || entry > shape.size() || rows[static_cast<std::size_t>(entry - 1)] != 0) {
        throw DomainError("Tableau: entries must be 1..n, each once");
      }
      rows[static_cast<std::size_t>(entry - 1)] = static_cast<int>(i) + 1;
    }
  }
  GrowthSequence out(std::move(rows));
  if (out.tableau() != tableau) throw DomainError("Tableau: rows must increase left to right");
  return out;
}

Partition GrowthSequence::prefix(int i) const {
  if (i < 0 || i > size()) throw DomainError("GrowthSequence::prefix: index out of range");
  std::vector<int> fill;
  for (int step = 0; step < i; ++step) {
    const auto idx = static_cast<std::size_t>(rows_[static_cast<std::size_t>(step)] - 1);
    if (idx == fill.size()) fill.push_back(0);
    ++fill[idx];
  }
  return Partition(std::move(fill));
}

Tableau GrowthSequence::tableau() const {
  std::vector<std::vector<int>> cells(static_cast<std::size_t>(shape_.length()));
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    cells[static_cast<std::size_t>(rows_[i] - 1)].push_back(static_cast<int>(i) + 1);
  }
  return Tableau(std::move(cells));
}

int GrowthSequence::second_row_start() const {
  const auto it = std::find(rows_.begin(), rows_.end(), 2);
  return it == rows_.end() ? 0 : static_cast<int>(it - rows_.begin()) + 1;
}

GrowthSequenceStream::GrowthSequenceStream(Partition shape)
    : shape_(std::move(shape)),
      rows_(static_cast<std::size_t>(shape_.size()), 0),
      fill_(static_cast<std::size_t>(shape_.length()), 0) {}

int GrowthSequenceStream::smallest_addable(int above) const {
  for (int r = above + 1; r <= shape_.length(); ++r) {
    const auto idx = static_cast<std::size_t>(r - 1);
    if (fill_[idx] < shape_.row(r) && (r == 1 || fill_[idx - 1] > fill_[idx])) return r;
  }
  return 0;
}

bool GrowthSequenceStream::advance() {
  // Greedy completion of any valid prefix stays inside the shape, so the
  // lexicographic successor is: bump the rightmost bumpable step, then refill.
  const auto n = rows_.size();
  for (std::size_t pos = n; pos-- > 0;) {
    const int current = rows_[pos];
    --fill_[static_cast<std::size_t>(current - 1)];
    const int bumped = smallest_addable(current);
    if (bumped == 0) continue;
    rows_[pos] = bumped;
    ++fill_[static_cast<std::size_t>(bumped - 1)];
    for (std::size_t rest = pos + 1; rest < n; ++rest) {
      const int r = smallest_addable(0);
      rows_[rest] = r;
      ++fill_[static_cast<std::size_t>(r - 1)];
    }
    return true;
  }
  return false;
}

std::optional<GrowthSequence> GrowthSequenceStream::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    for (auto& r : rows_) {
      r = smallest_addable(0);
      ++fill_[static_cast<std::size_t>(r - 1)];
    }
  } else if (!advance()) {
    done_ = true;
    return std::nullopt;
  }
  return GrowthSequence(rows_);
}

std::vector<GrowthSequence> enumerate_growth_sequences(const Partition& shape) {
  std::vector<GrowthSequence> out;
  GrowthSequenceStream stream(shape);
  while (auto next = stream.next()) out.push_back(std::move(*next));
  return out;
}

}  // namespace shuffle_spectra
