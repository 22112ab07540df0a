#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace qframe {

struct CheckOptions
{
    std::uint64_t seed = 1;
    std::size_t dim = 4;    // ambient dimension n
    std::size_t count = 7;  // frame size m (>= dim)
    std::size_t trials = 20;
    /// Replaces every per-case tolerance when set.
    std::optional<double> tolerance;
};

struct CheckCase
{
    std::string theorem;
    std::string check;
    double max_residual = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    std::string error; // non-empty when the case threw
};

struct CheckReport
{
    CheckOptions options;
    std::vector<CheckCase> cases;

    bool passed() const;
};

/// Runs the numerical theorem checks. Every case draws from its own generator
/// seeded from options.seed and its index, so results do not depend on order.
CheckReport run_checks(const CheckOptions &options);

nlohmann::json check_report_to_json(const CheckReport &report);

} // namespace qframe
