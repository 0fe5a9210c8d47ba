#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"

namespace hodgejac::cli {

enum ExitCode : int {
    kSuccess = 0,
    kInputError = 2,
    kNotSmooth = 3,
    kBadPrime = 4,
    kInvariantViolation = 5,
};

// In prime mode p must exceed 2 * (largest numerator or denominator among
// the input coefficients) * kPrimeSafetyFactor.
inline constexpr std::uint64_t kPrimeSafetyFactor = 1024;

struct JobConfig {
    std::string command;
    std::optional<std::string> f, g, h, k, P;
    std::optional<int> q;
    std::optional<int> degree;  // duality pairing degree
    std::string field = "rational";
    bool raw = false;
    std::optional<std::size_t> nvars;
    std::uint64_t seed = 42;
    int trials = 25;
    std::string suite = "all";
};

struct CommandResult {
    nlohmann::ordered_json report;
    int exit_code = kSuccess;
};

// Runs one command; library errors become an {"error": ...} report with
// the matching exit code.
CommandResult run(const JobConfig& config);

// Canonical rendering: two-space indentation and a trailing newline.
std::string render(const nlohmann::ordered_json& report);

}  // namespace hodgejac::cli
