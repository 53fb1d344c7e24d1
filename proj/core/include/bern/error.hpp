#pragma once

#include <stdexcept>
#include <string>

namespace bern {

// A request exceeds a configured resource ceiling (working precision,
// sieve range, word size). Raised before any large allocation.
class LimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The recurrence oracle was asked for an index above its own ceiling. This
// is a property of the test oracle, not of the engine.
class OracleLimitError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// The rounding consistency check kept failing after every retry.
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace bern
