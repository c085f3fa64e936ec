#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mols {

// Sidecar provenance record written next to every CLI output file: the
// subcommand, its arguments, the library version, the RNG seed when one was
// used, and SHA-256 digests of all inputs and outputs.
struct RunManifest {
  std::string subcommand;
  std::vector<std::string> argv;
  std::string version;
  std::optional<std::uint64_t> seed;
  std::vector<std::pair<std::string, std::string>> inputs;  // (path, sha256)
  std::vector<std::pair<std::string, std::string>> outputs; // (path, sha256)
};

std::string run_manifest_json(const RunManifest& m);

// Writes run_manifest_json to artifact_path + ".manifest.json"
// (Errc::IoFailure on write errors).
void write_run_manifest(const std::string& artifact_path, const RunManifest& m);

} // namespace mols
