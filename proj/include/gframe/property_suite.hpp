#pragma once

#include <cstdint>

#include "gframe/report.hpp"

namespace gframe {

struct SuiteOptions {
    std::uint64_t seed = 1;
    int cases = 20;
    TolerancePolicy tol;
};

// Runs every module's invariants on `cases` generated instances. One check
// per property, carrying the case count, failure count and worst deviation.
// Deterministic in (seed, cases, tol).
RunReport run_property_suite(const SuiteOptions& options);

} // namespace gframe
