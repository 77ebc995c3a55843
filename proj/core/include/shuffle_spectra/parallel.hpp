#pragma once

#include <cstddef>
#include <functional>

namespace shuffle_spectra {

/// Worker count: SHUFFLE_SPECTRA_THREADS if set to a positive integer,
/// otherwise std::thread::hardware_concurrency() (at least 1).
unsigned worker_count();

/// Runs body(i) for every i in [0, count) on up to `threads` workers
/// (0 means worker_count()). Indices are split into contiguous blocks, so
/// callers writing into per-index slots get results independent of scheduling.
/// The first exception thrown by any worker is rethrown on the caller.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body,
                  unsigned threads = 0);

}  // namespace shuffle_spectra
