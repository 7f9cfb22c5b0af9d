#pragma once

#include <stdexcept>
#include <string>

namespace rsys {

// Thrown on contract violations: malformed documents, alphabet/width
// mismatches, and size caps on the exhaustive operations.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace rsys
