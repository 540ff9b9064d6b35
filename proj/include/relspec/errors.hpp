// ============================================================================
//  errors.hpp
//
//  Analysis-level error conditions. Parse and validation problems are data
//  (see diagnostics.hpp); these exceptions cover conditions discovered during
//  analysis proper, after a suite has been accepted.
// ============================================================================
#pragma once

#include <stdexcept>
#include <string>

namespace relspec {

enum class Errc {
  no_admissible_strategy,  // a fired property has an empty admissible set
  exploration_cap_exceeded,  // strategy enumeration exceeded the caller cap
  instance_cap_exceeded,     // exact-reliability enumeration over too many instances
  unbounded_window,          // $-bounded window where a finite bound is required
  bench_cap_exceeded,        // benchmark parameter outside documented caps
};

struct Error : std::runtime_error {
  Errc code;
  std::string subject;  // offending property / parameter, when known

  Error(Errc c, const std::string& subj, const std::string& what)
      : std::runtime_error(what), code(c), subject(subj) {}
};

}  // namespace relspec
