#include "shuffle_spectra/errors.hpp"
#include "shuffle_spectra/parallel.hpp"
#include "shuffle_spectra/spectrum.hpp"

namespace shuffle_spectra {

ScaledScalar eigenvalue(const GrowthSequence& tableau, int k, NumericMode mode, NuCache* cache) {
  const int n = tableau.size();
  if (n < 1) throw DomainError("eigenvalue: empty tableau");
  ScaledScalar total = ScaledScalar::from_integer(0, mode);
  Partition prefix;
  for (int row : tableau.rows()) {
    NuKey key(prefix, row, k);
    total += cache != nullptr ? cache->get(key, mode) : nu(key, mode);
    prefix = prefix.with_box(row);
  }
  return total / ScaledScalar::from_integer(n, mode);
}

ScaledScalar f0(const GrowthSequence& tableau, int k, NumericMode mode) {
  const int n = tableau.size();
  if (n < 1) throw DomainError("f0: empty tableau");
  if (k < 1) throw DomainError("f0: k must be at least 1");
  const Tableau filled = tableau.tableau();
  ScaledScalar total = ScaledScalar::from_integer(0, mode);
  for (std::size_t i = 0; i < filled.rows().size(); ++i) {
    const auto& row = filled.rows()[i];
    for (std::size_t j = 0; j < row.size(); ++j) {
      total += ScaledScalar::from_ratio(static_cast<long>(j) + 1, row[j], mode)
                   .pow(static_cast<std::uint64_t>(k));
    }
  }
  return total / ScaledScalar::from_integer(n, mode);
}

FDecomposition f_decomposition(const GrowthSequence& tableau, int k, NumericMode mode,
                               NuCache* cache) {
  FDecomposition out;
  out.f0 = f0(tableau, k, mode);
  out.f_plus = eigenvalue(tableau, k, mode, cache) - out.f0;
  return out;
}

std::vector<SpectrumEntry> formula_spectrum(int n, int k, const SpectrumOptions& options) {
  if (n < 1) throw DomainError("formula_spectrum: n must be at least 1");
  if (k < 1) throw DomainError("formula_spectrum: k must be at least 1");
  if (n > kMaxSpectrumSize) {
    throw ResourceError("formula_spectrum: n = " + std::to_string(n) + " exceeds the enumeration limit " +
                        std::to_string(kMaxSpectrumSize));
  }
  const std::vector<Partition> shapes = enumerate_partitions(n);
  std::vector<std::vector<SpectrumEntry>> per_shape(shapes.size());
  NuCache cache;
  NuCache* cache_ptr = options.use_cache ? &cache : nullptr;

  parallel_for(
      shapes.size(),
      [&](std::size_t s) {
        const Partition& shape = shapes[s];
        const BigInt multiplicity = dimension(shape);
        auto& entries = per_shape[s];
        GrowthSequenceStream stream(shape);
        std::size_t index = 0;
        while (auto tableau = stream.next()) {
          SpectrumEntry entry;
          entry.shape = shape;
          entry.tableau_index = index++;
          entry.multiplicity = multiplicity;
          entry.eigenvalue = eigenvalue(*tableau, k, options.mode, cache_ptr);
          if (options.with_decomposition) {
            entry.f0 = f0(*tableau, k, options.mode);
            entry.f_plus = entry.eigenvalue - entry.f0;
          }
          entry.tableau = std::move(*tableau);
          entries.push_back(std::move(entry));
        }
      },
      options.threads);

  std::vector<SpectrumEntry> out;
  for (auto& entries : per_shape) {
    for (auto& entry : entries) out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace shuffle_spectra
