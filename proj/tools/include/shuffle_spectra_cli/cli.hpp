#pragma once

#include <filesystem>
#include <ostream>
#include <string>

namespace shuffle_spectra::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 1,
  kResourceError = 2,
  kNumericError = 3,
};

/// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Lower-case hex SHA-256 of `bytes`.
std::string sha256_hex(const std::string& bytes);

/// Manifest path for an output file: `<file>.manifest.json`.
std::filesystem::path manifest_path(const std::filesystem::path& output);

}  // namespace shuffle_spectra::cli
