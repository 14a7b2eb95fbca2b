#include "chromacode/errors.hpp"

#include <cstdlib>
#include <string>

namespace chromacode {

std::size_t guard_from_env(std::size_t fallback) {
    const char* raw = std::getenv("CHROMACODE_GUARD");
    if (raw == nullptr || *raw == '\0') return fallback;
    try {
        std::size_t pos = 0;
        unsigned long long v = std::stoull(raw, &pos);
        if (pos != std::string(raw).size() || v == 0) return fallback;
        return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
        return fallback;
    }
}

void check_guard(std::size_t size, std::size_t guard, const std::string& what) {
    if (size > guard) {
        throw GuardExceeded("instance too large: " + what + " has size " + std::to_string(size) +
                                " > guard " + std::to_string(guard),
                            "size");
    }
}

}  // namespace chromacode
