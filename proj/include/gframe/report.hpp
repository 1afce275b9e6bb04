#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "gframe/core.hpp"

namespace gframe {

using Quantities = std::vector<std::pair<std::string, Real>>;

// A classification outcome (e.g. "is_frame = false"): informative, never a
// failure by itself.
struct Finding {
    std::string name;
    bool value = false;
    Quantities quantities;
};

// An asserted identity or equivalence. Any failed check fails the run.
struct Check {
    std::string name;
    bool passed = false;
    Quantities quantities;
    std::string note;
};

struct RunReport {
    std::vector<std::string> command;
    TolerancePolicy tolerance;
    std::optional<std::uint64_t> seed;
    std::vector<Finding> findings;
    std::vector<Check> checks;
    std::vector<std::string> notes;

    void finding(std::string name, bool value, Quantities q = {});
    // Returns `passed` so callers can chain.
    bool check(std::string name, bool passed, Quantities q = {}, std::string note = {});

    bool passed() const;
};

enum class ReportFormat { text, json };

void write_report(std::ostream& out, const RunReport& report, ReportFormat format);

} // namespace gframe
