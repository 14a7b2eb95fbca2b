#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace chromacode::cli {

struct GoldenRow {
    std::string case_name;
    std::string quantity;
    nlohmann::json expected;  // published value
    nlohmann::json computed;
    double tolerance = 0;
    bool pass = false;
};

// Case names: example1..example5, chromatic, spectra, or all.
std::vector<std::string> golden_cases();
std::vector<GoldenRow> reproduce_case(const std::string& name, double tol);

nlohmann::json to_json(const std::vector<GoldenRow>& rows);
std::string to_text(const std::vector<GoldenRow>& rows);

}  // namespace chromacode::cli
