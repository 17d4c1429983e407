#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace descmat {

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;  ///< filled on failure or for informational probes
};

struct VerifyReport {
    std::string suite;
    int n_max = 0;
    std::vector<Check> checks;
    bool all_pass() const;
};

const std::vector<std::string>& verify_suite_names();

/// Runs one of {matrices, inverses, eigen, characters, inversion, fineness, all}
/// up to n_max (each identity additionally respects its own documented cap).
VerifyReport verify_suite(const std::string& suite, int n_max);

nlohmann::json verify_to_json(const VerifyReport& report);

}  // namespace descmat
