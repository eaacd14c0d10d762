#include "manifest.hpp"

#include <openssl/evp.h>

#include <cstdio>
#include <ctime>
#include <fstream>
#include <memory>
#include <stdexcept>

#include <json.hpp>

namespace multiassoc::cli {

std::string utc_timestamp() {
    std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string sha256_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path.string());
    std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
    EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr);
    char buf[1 << 16];
    while (in.read(buf, sizeof buf) || in.gcount() > 0) EVP_DigestUpdate(ctx.get(), buf, in.gcount());
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned len = 0;
    EVP_DigestFinal_ex(ctx.get(), digest, &len);
    std::string hex;
    for (unsigned i = 0; i < len; ++i) {
        char byte[3];
        std::snprintf(byte, sizeof byte, "%02x", digest[i]);
        hex += byte;
    }
    return hex;
}

std::filesystem::path manifest_path(const std::filesystem::path& output) {
    auto p = output;
    p += ".manifest.json";
    return p;
}

std::string manifest_reference(const std::filesystem::path& output) {
    return "manifest: " + manifest_path(output).filename().string();
}

void write_manifest(RunManifest m, const std::vector<std::filesystem::path>& outputs) {
    if (outputs.empty()) return;
    for (const auto& p : outputs) m.outputs.emplace_back(p.string(), sha256_file(p));
    m.finished = utc_timestamp();
    nlohmann::json j{{"command_line", m.command_line},
                     {"command", m.command},
                     {"construction", m.construction},
                     {"n", m.n},
                     {"k", m.k},
                     {"seed", m.seed ? nlohmann::json(*m.seed) : nlohmann::json(nullptr)},
                     {"started", m.started},
                     {"finished", m.finished},
                     {"version", m.version}};
    for (const auto& [path, digest] : m.outputs) j["outputs"].push_back({{"path", path}, {"sha256", digest}});
    std::ofstream out(manifest_path(outputs.front()));
    if (!out) throw std::runtime_error("cannot write manifest for " + outputs.front().string());
    out << j.dump(2) << '\n';
}

}  // namespace multiassoc::cli
