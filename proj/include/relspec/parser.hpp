// ============================================================================
//  parser.hpp
//
//  Text -> SpecSuite. The format is line-oriented UTF-8; `#` starts a
//  comment (but `##` is the delay prefix), declarations are:
//
//      timebase <INT> ms
//      action <ID> causes <ID> reliability <FLOAT>
//      property <ID> target <FLOAT> { correct: <seq>  rely: <seq> }
//      scenario <ID>: <PROP>[@<INT>], ...
//
//  where <seq> is `[antecedent |->] consequent` over `##N`, `##[a:b]`,
//  `##[a:$]` (antecedent only), `[~n]`, `[*k]`, `[=m]` and parentheses.
//
//  Parsing is total and position-stable: identical input produces an
//  identical AST and identical diagnostics; on errors the parser skips to
//  the next declaration and keeps going.
// ============================================================================
#pragma once

#include <optional>
#include <string_view>

#include "relspec/ast.hpp"
#include "relspec/diagnostics.hpp"

namespace relspec {

struct ParseResult {
  std::optional<SpecSuite> suite;  // absent only when nothing was usable
  std::vector<Diagnostic> diagnostics;
};

ParseResult parse_suite(std::string_view text);

// Structural checks on an accepted suite: name uniqueness and referential
// integrity, probability ranges, correctness chains being linear outcome
// chains with bounded windows, redundancy counts >= 2, no nested temporal
// blocks, '$' confined to antecedents, scenario anchors >= 0.
std::vector<Diagnostic> validate_suite(const SpecSuite& suite);

}  // namespace relspec
