#pragma once

#include <stdexcept>

namespace pentagon {

// Bad value passed to an operation (wrong dimension, label out of range, ...).
struct argument_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Malformed external input (graph6 text, rationals, certificate JSON).
struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input exceeds a hard size limit of the exact-arithmetic paths.
struct size_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace pentagon
