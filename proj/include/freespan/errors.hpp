#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace freespan {

/// A caller violated an API precondition (mismatched moduli, bad index,
/// slice mismatch, malformed argument).  These are programming or input
/// errors, not resource limits.
struct usage_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Input text was rejected by one of the parsers.  `position` is a 0-based
/// byte offset into the offending input.
struct parse_error : std::runtime_error {
  parse_error(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " (at offset " + std::to_string(pos) + ")"),
        position(pos) {}
  std::size_t position;
};

/// A configured enumeration limit was exceeded (slice too large, generator
/// cap or time limit hit, expansion degree above the configured cap).
struct budget_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace freespan
