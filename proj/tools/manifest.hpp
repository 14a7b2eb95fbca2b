#pragma once

#include <nlohmann/json.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace chromacode::cli {

inline constexpr const char* kToolVersion = "0.1.0";

struct RunManifest {
    std::string subcommand;
    std::vector<std::string> args;               // full argument list after the program name
    std::map<std::string, std::string> inputs;   // path -> hex SHA-256
    std::optional<std::uint64_t> seed;
    std::string tool_version = kToolVersion;
    std::vector<std::string> outputs;
};

std::string sha256_hex(const std::string& bytes);
std::string sha256_file(const std::string& path);

nlohmann::json to_json(const RunManifest& m);
RunManifest manifest_from_json(const nlohmann::json& j);

}  // namespace chromacode::cli
