#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace multiassoc::cli {

struct RunManifest {
    std::vector<std::string> command_line;
    std::string command;
    std::string construction;
    int n = 0;
    int k = 0;
    std::optional<std::uint64_t> seed;
    std::string started;
    std::string finished;
    std::string version;
    std::vector<std::pair<std::string, std::string>> outputs;  // path, sha256
};

std::string utc_timestamp();
std::string sha256_file(const std::filesystem::path& path);
std::filesystem::path manifest_path(const std::filesystem::path& output);
// deterministic comment embedded in output files; timestamps live only in the sidecar
std::string manifest_reference(const std::filesystem::path& output);
// hashes each output, stamps `finished` and writes <first output>.manifest.json
void write_manifest(RunManifest m, const std::vector<std::filesystem::path>& outputs);

}  // namespace multiassoc::cli
