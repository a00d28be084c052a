#pragma once

#include "json.hpp"

#include <string>

namespace iwknot {

inline constexpr const char* kVersion = "0.1.0";

using Json = nlohmann::ordered_json;

/// Uniform envelope for everything the scans and the CLI emit. No timestamp
/// unless one is set explicitly, so reports for fixed inputs compare equal
/// byte for byte.
struct ScanReport {
    std::string command;
    Json params = Json::object();
    Json rows = Json::array();
    bool pass = true;
    std::string summary;
    Json witness; // first failing row, null on PASS
    std::string timestamp;

    void fail_with(const Json& row) {
        if (pass) witness = row;
        pass = false;
    }
    Json to_json() const;
};

ScanReport report_from_json(const Json& j);

} // namespace iwknot
