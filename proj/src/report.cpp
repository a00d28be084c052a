#include "iwknot/report.hpp"

#include "iwknot/errors.hpp"

namespace iwknot {

Json ScanReport::to_json() const {
    Json j;
    Json header;
    header["command"] = command;
    header["parameters"] = params;
    header["version"] = kVersion;
    if (!timestamp.empty()) header["timestamp"] = timestamp;
    j["header"] = header;
    j["rows"] = rows;
    j["verdict"] = pass ? "PASS" : "FAIL";
    j["summary"] = summary;
    if (!pass) j["witness"] = witness;
    return j;
}

ScanReport report_from_json(const Json& j) {
    try {
        ScanReport r;
        const Json& h = j.at("header");
        r.command = h.at("command").get<std::string>();
        r.params = h.at("parameters");
        if (h.contains("timestamp")) r.timestamp = h.at("timestamp").get<std::string>();
        r.rows = j.at("rows");
        r.pass = j.at("verdict").get<std::string>() == "PASS";
        r.summary = j.at("summary").get<std::string>();
        if (j.contains("witness")) r.witness = j.at("witness");
        return r;
    } catch (const Json::exception& e) {
        fail(ErrorKind::SyntaxError, std::string("report: ") + e.what());
    }
}

} // namespace iwknot
