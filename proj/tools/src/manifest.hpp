#pragma once

#include <chrono>
#include <filesystem>
#include <string>

#include "json.hpp"

namespace shuffle_spectra::cli {

struct RunContext {
  std::string command;
  nlohmann::json parameters = nlohmann::json::object();
  std::filesystem::path out_dir;
  std::chrono::system_clock::time_point started = std::chrono::system_clock::now();
  std::chrono::steady_clock::time_point clock = std::chrono::steady_clock::now();
};

/// Writes `body` to out_dir/name and its manifest next to it.
void write_output(const RunContext& ctx, const std::string& name, const std::string& body);

}  // namespace shuffle_spectra::cli
