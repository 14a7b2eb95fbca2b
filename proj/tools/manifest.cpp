#include "manifest.hpp"

#include "chromacode/errors.hpp"

#include <openssl/evp.h>

#include <fstream>
#include <iterator>

namespace chromacode::cli {

std::string sha256_hex(const std::string& bytes) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
        throw Error("SHA-256 computation failed");
    }
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; ++i) {
        out.push_back(hex[digest[i] >> 4]);
        out.push_back(hex[digest[i] & 0xf]);
    }
    return out;
}

std::string sha256_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidArgument("cannot open '" + path + "'");
    return sha256_hex(std::string(std::istreambuf_iterator<char>(in), {}));
}

nlohmann::json to_json(const RunManifest& m) {
    nlohmann::json j{{"subcommand", m.subcommand},
                     {"args", m.args},
                     {"inputs", m.inputs},
                     {"tool_version", m.tool_version},
                     {"outputs", m.outputs}};
    j["seed"] = m.seed ? nlohmann::json(*m.seed) : nlohmann::json(nullptr);
    return j;
}

RunManifest manifest_from_json(const nlohmann::json& j) {
    RunManifest m;
    try {
        m.subcommand = j.at("subcommand").get<std::string>();
        m.args = j.at("args").get<std::vector<std::string>>();
        m.inputs = j.at("inputs").get<std::map<std::string, std::string>>();
        m.tool_version = j.at("tool_version").get<std::string>();
        m.outputs = j.value("outputs", std::vector<std::string>{});
        if (j.contains("seed") && !j["seed"].is_null()) m.seed = j["seed"].get<std::uint64_t>();
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument(std::string("malformed manifest: ") + e.what());
    }
    return m;
}

}  // namespace chromacode::cli
