// ============================================================================
//  diagnostics.hpp
//
//  Position-carrying messages produced by the parser and the validator.
//  Parsing is total: bad input yields diagnostics, never an exception.
// ============================================================================
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace relspec {

enum class Severity : std::uint8_t { error, warning };

struct Diagnostic {
  Severity severity = Severity::error;
  int line = 0;  // 1-based; 0 when not tied to a source position
  int col = 0;   // 1-based
  std::string subject;  // declaration the message refers to, when known
  std::string message;

  bool operator==(const Diagnostic&) const = default;
};

// Renders "line:col: error: message [subject]" for terminal output.
std::string to_text(const Diagnostic& d);

// True when any diagnostic is an error (as opposed to warnings only).
bool has_errors(const std::vector<Diagnostic>& ds);

}  // namespace relspec
