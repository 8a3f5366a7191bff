#pragma once

#include <stdexcept>
#include <string>

namespace irsmatch {

// Bad user-supplied data (scenario files, CLI parameters). CLI maps this to exit code 3.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A resource guard tripped (enumeration cap, node budget). CLI maps this to exit code 4.
class GuardError : public std::runtime_error {
 public:
  explicit GuardError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace irsmatch
