#pragma once

#include <stdexcept>

namespace wolfspace {

// Invalid user-supplied family, rank, or space name.
struct ConfigurationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A space whose level-one roots are all short admits no delta, so the
// submanifold model cannot be built (this is exactly the Sp(n) family).
struct NoDeltaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Violated internal invariant; indicates a bug, not bad input.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace wolfspace
