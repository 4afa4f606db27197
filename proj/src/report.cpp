#include "levilab/report.hpp"

#include <algorithm>

namespace levilab {

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::pass:
        return "PASS";
    case Verdict::fail:
        return "FAIL";
    case Verdict::evidence:
        return "EVIDENCE";
    }
    return "FAIL";
}

bool VerificationReport::overall_pass() const
{
    return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const CheckRecord& c) {
        return c.mandatory ? c.verdict == Verdict::pass : c.verdict != Verdict::fail;
    });
}

Json VerificationReport::to_json() const
{
    Json list = Json::array();
    for (const auto& c : checks) {
        Json j{{"id", c.id},
               {"description", c.description},
               {"mandatory", c.mandatory},
               {"verdict", to_string(c.verdict)},
               {"values", c.values},
               {"tolerances", c.tolerances},
               {"witnesses", c.witnesses}};
        j["seed"] = c.seed ? Json(*c.seed) : Json(nullptr);
        list.push_back(std::move(j));
    }
    return {{"schema", kReportSchema},
            {"tool_version", kToolVersion},
            {"suite", suite},
            {"parameters", parameters},
            {"checks", std::move(list)},
            {"overall", overall_pass() ? "PASS" : "FAIL"}};
}

} // namespace levilab
