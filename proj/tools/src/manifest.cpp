#include "manifest.hpp"

#include <openssl/evp.h>

#include <array>
#include <cstdio>
#include <ctime>
#include <fstream>

#include "shuffle_spectra/errors.hpp"
#include "shuffle_spectra_cli/cli.hpp"

namespace shuffle_spectra::cli {

namespace {

std::string iso_timestamp(std::chrono::system_clock::time_point when) {
  const std::time_t seconds = std::chrono::system_clock::to_time_t(when);
  std::tm utc{};
  gmtime_r(&seconds, &utc);
  std::array<char, 32> buffer{};
  std::strftime(buffer.data(), buffer.size(), "%Y-%m-%dT%H:%M:%SZ", &utc);
  return buffer.data();
}

void write_file(const std::filesystem::path& path, const std::string& body) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw std::runtime_error("cannot open " + path.string() + " for writing");
  file << body;
  if (!file) throw std::runtime_error("failed writing " + path.string());
}

}  // namespace

std::string sha256_hex(const std::string& bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int length = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest.data(), &length, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 digest failed");
  }
  std::string out;
  out.reserve(2 * length);
  for (unsigned int i = 0; i < length; ++i) {
    std::array<char, 3> hex{};
    std::snprintf(hex.data(), hex.size(), "%02x", digest[i]);
    out += hex.data();
  }
  return out;
}

std::filesystem::path manifest_path(const std::filesystem::path& output) {
  return output.parent_path() / (output.filename().string() + ".manifest.json");
}

void write_output(const RunContext& ctx, const std::string& name, const std::string& body) {
  std::filesystem::create_directories(ctx.out_dir);
  const std::filesystem::path path = ctx.out_dir / name;
  write_file(path, body);

  nlohmann::json manifest;
  manifest["command"] = ctx.command;
  manifest["parameters"] = ctx.parameters;
  manifest["version"] = SHUFFLE_SPECTRA_VERSION;
  manifest["start_timestamp"] = iso_timestamp(ctx.started);
  manifest["wall_seconds"] =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - ctx.clock).count();
  manifest["outputs"] = {{name, {{"sha256", sha256_hex(body)}, {"bytes", body.size()}}}};
  write_file(manifest_path(path), manifest.dump(2) + "\n");
}

}  // namespace shuffle_spectra::cli
