#pragma once

#include <stdexcept>
#include <string>

namespace eocd {

// Raised for malformed input and violated preconditions. Internal invariant
// failures use std::logic_error instead so callers can tell the two apart.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace eocd
