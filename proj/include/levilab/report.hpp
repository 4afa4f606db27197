#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "levilab/io.hpp"

namespace levilab {

inline constexpr const char* kReportSchema = "levilab.report/1";
inline constexpr const char* kToolVersion = "0.1.0";

enum class Verdict { pass, fail, evidence };

std::string to_string(Verdict v);

/// One check. Mandatory checks must PASS; evidence checks report EVIDENCE
/// and only fail when a witness breaks a hard bound.
struct CheckRecord {
    std::string id;
    std::string description;
    bool mandatory = true;
    Verdict verdict = Verdict::fail;
    Json values = Json::object();
    Json tolerances = Json::object();
    Json witnesses = Json::array();
    std::optional<std::uint64_t> seed;
};

struct VerificationReport {
    std::string suite;
    Json parameters = Json::object();
    std::vector<CheckRecord> checks;

    bool overall_pass() const;
    /// Key order is fixed, so equal inputs give byte-identical output.
    Json to_json() const;
};

} // namespace levilab
