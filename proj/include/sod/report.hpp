#pragma once

#include <json.hpp>

#include "sod/collections.hpp"

namespace sod {

/// One report object per CLI invocation. JSON is the machine format;
/// `table` renders the same content for terminals. Timings are the only
/// part allowed to differ between otherwise identical runs.
struct Report {
    std::string command;
    nlohmann::json parameters = nlohmann::json::object();
    std::vector<CheckResult> checks;
    std::vector<std::string> notes;
    nlohmann::json result;  // command-specific payload, may be null
    std::optional<bool> overall;
    std::map<std::string, double> timings_ms;

    void absorb(const VerificationReport& vr);

    nlohmann::json to_json() const;
    std::string to_table() const;
};

nlohmann::json graded_to_json(const GradedDimension& g);

}  // namespace sod
