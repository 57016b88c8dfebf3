#include "sod/report.hpp"

#include "sod/cache.hpp"

#include <iomanip>
#include <sstream>

namespace sod {

nlohmann::json graded_to_json(const GradedDimension& g)
{
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [deg, dim] : g)
        j[std::to_string(deg)] = dim;
    return j;
}

void Report::absorb(const VerificationReport& vr)
{
    for (const auto& [key, value] : vr.parameters)
        if (!parameters.contains(key))
            parameters[key] = value;
    checks.insert(checks.end(), vr.checks.begin(), vr.checks.end());
    notes.insert(notes.end(), vr.notes.begin(), vr.notes.end());
    if (!overall)
        overall = true;
    overall = *overall && vr.overall;
}

nlohmann::json Report::to_json() const
{
    nlohmann::json j;
    j["schemaVersion"] = kSchemaVersion;
    j["command"] = command;
    j["parameters"] = parameters;
    j["checks"] = nlohmann::json::array();
    for (const CheckResult& c : checks)
        j["checks"].push_back(
            {{"name", c.name}, {"verdict", c.passed ? "pass" : "fail"}, {"witness", c.witness}});
    j["notes"] = notes;
    if (!result.is_null())
        j["result"] = result;
    if (overall)
        j["overall"] = *overall ? "pass" : "fail";
    j["timings"] = nlohmann::json::object();
    for (const auto& [stage, ms] : timings_ms)
        j["timings"][stage] = ms;
    return j;
}

std::string Report::to_table() const
{
    std::ostringstream os;
    os << "command: " << command << '\n';
    if (!parameters.empty()) {
        os << "parameters:";
        for (auto it = parameters.begin(); it != parameters.end(); ++it) {
            os << ' ' << it.key() << '=';
            if (it.value().is_string())
                os << it.value().get<std::string>();
            else
                os << it.value().dump();
        }
        os << '\n';
    }
    if (!checks.empty()) {
        size_t width = 0;
        for (const CheckResult& c : checks)
            width = std::max(width, c.name.size());
        for (const CheckResult& c : checks)
            os << "  " << std::left << std::setw(static_cast<int>(width) + 2) << c.name
               << (c.passed ? "pass  " : "FAIL  ") << c.witness << '\n';
    }
    if (!result.is_null())
        os << "result: " << result.dump() << '\n';
    for (const std::string& note : notes)
        os << "note: " << note << '\n';
    if (overall)
        os << "overall: " << (*overall ? "pass" : "fail") << '\n';
    for (const auto& [stage, ms] : timings_ms)
        os << "timing: " << stage << " = " << ms << " ms\n";
    return os.str();
}

}  // namespace sod
