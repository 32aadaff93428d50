#pragma once

#include <stdexcept>
#include <string>

namespace windmill {

// Malformed or inconsistent input data (bad tables, bad parameters, bad files).
struct InputError : std::runtime_error {
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A computation needed orbit or vertex data outside the declared truncation.
struct TruncationError : std::runtime_error {
  explicit TruncationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace windmill
