#pragma once

#include <stdexcept>
#include <string>

namespace groupmeans {

// Input text does not conform to the description format.
struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Wrong ambient group: mismatched specs, or an operation that needs an
// infinite group got a rank-0 one.
struct spec_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Representation kind not supported by the operation.
struct kind_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Query or derived window falls outside an oracle's horizon.
struct horizon_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Problem size exceeds an exact-mode capacity; message carries a hint.
struct capacity_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A mathematical invariant the library guarantees was violated; reserved
// for bugs, maps to a dedicated exit code in the CLI.
struct invariant_violation : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace groupmeans
