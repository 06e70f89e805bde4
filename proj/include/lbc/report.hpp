#pragma once

#include <string>

#include "lbc/checker.hpp"

namespace lbc {

enum class ReportFormat { Text, Json };

/// "True", "False" or "unknown".
std::string verdict_text(Truth v);

/// Text block (verdict, signal, call counts, timing) or the JSON document
/// {"verdict", "signal": [{"from","to","value"}], "solver_calls",
/// "tube_calls", "wall_ms"}.
std::string render_report(const CheckReport& report, ReportFormat format);

/// Process exit code for a verdict: 0 True, 1 False, 2 unknown.
int exit_code(Truth v);

inline constexpr int kExitError = 3;

}  // namespace lbc
