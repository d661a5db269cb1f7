#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "gnorm/checks.hpp"
#include "gnorm/specdoc.hpp"

namespace gnorm {

enum class ReportFormat { text, json };

/// Command output: a machine-readable body (schema-versioned JSON) plus the
/// command echo.  The text rendering is generated from the body, so every
/// numeric claim appears identically in both.
struct Report {
  std::string command_echo;
  nlohmann::json body;
};

std::string emit_report(const Report& r, ReportFormat fmt);

struct CommandResult {
  Report report;
  int exit_code = 0;  // 0 ok, 1 violated invariant, 2 budget/overflow, 3 input error
};

/// Dispatches a command line: closure | normalizer | tower | schur |
/// detect-normal | verify, each over a group/hom document.
CommandResult run_command(const std::vector<std::string>& argv);

/// The invariant suite behind `verify`: closure structure checks, normalizer
/// diagnostics, and detection consistency for one homomorphism.
CheckReport verify_hom(const GroupHom& phi, int max_cosets);

}  // namespace gnorm
