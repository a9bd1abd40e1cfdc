#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "advshare/symplectic.hpp"

namespace advshare::cli {

inline constexpr const char* kSchemaId = "advshare-report";
inline constexpr const char* kSchemaVersion = "1.0.0";

enum ExitCode : int { kOk = 0, kInvalidInput = 1, kBudgetExceeded = 2, kInvariantViolation = 3 };

struct Options {
    std::string path;
    std::optional<std::string> shares;  // "--J 1,4", 1-based
    std::optional<std::size_t> max_size;
    std::uint64_t seed = 0;
    std::size_t trials = 1;
    std::optional<std::uint64_t> budget;  // codeword enumeration cap
};

struct CommandResult {
    nlohmann::ordered_json report;
    int exit_code = kOk;
    std::string summary;  // human-readable, for stderr
};

// Parses "a,b,..." (1-based) into a sorted 0-based index set; empty string is the empty set.
IndexSet parse_share_list(const std::string& text, std::size_t n);

// Each command catches library errors and records them in the report.
CommandResult cmd_validate(const Options& opts);
CommandResult cmd_analyze(const Options& opts);
CommandResult cmd_demo(const Options& opts);

CommandResult run_command(const std::string& name, const Options& opts);

}  // namespace advshare::cli
