#pragma once

#include <stdexcept>
#include <string>

namespace midmile {

// Exit-code mapping in the CLI: InputError/ConfigError -> 2,
// InfeasibleError -> 3, GuardError -> 4.

struct InputError : std::runtime_error {
  explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

struct InfeasibleError : std::runtime_error {
  explicit InfeasibleError(const std::string& msg) : std::runtime_error(msg) {}
};

struct GuardError : std::runtime_error {
  explicit GuardError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace midmile
