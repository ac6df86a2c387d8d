#ifndef QUIVINV_REPORT_HPP
#define QUIVINV_REPORT_HPP

#include "quivinv/dsl.hpp"

#include <nlohmann/json_fwd.hpp>

#include <optional>
#include <string>

namespace quivinv {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

struct RunOptions {
    int n = 2;
    int m = 1;
    int d = 2;
    std::size_t monomial_guard = 200000;
    int length_cap = -1;
    std::string example_id; // verify-example only
};

struct CommandOutcome {
    int exit_code = 0; // 0 pass/consistent, 1 fail/inconsistent
    std::string json;  // serialized report (2-space indent)
    std::string text;  // text rendering of the same content
};

/// Dispatch a CLI command. `doc` may be empty only for verify-example.
/// Throws ParseError/std::invalid_argument for usage errors (exit 2) and
/// ResourceGuardError for guard aborts (exit 3).
CommandOutcome run_command(const std::string& command, const std::optional<QuiverDoc>& doc,
                           const RunOptions& opts);

} // namespace quivinv

#endif
