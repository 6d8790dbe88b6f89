#pragma once

#include <stdexcept>
#include <string>

namespace kforest {

// Bad caller input: malformed files, violated preconditions, out-of-range
// parameters. The CLI maps this to exit code 2.
class input_error : public std::runtime_error {
 public:
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// A broken internal invariant. Signals a bug in this library, not bad input.
// The CLI maps this to exit code 3.
class internal_error : public std::logic_error {
 public:
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace kforest
