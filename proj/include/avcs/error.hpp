#pragma once

#include <stdexcept>
#include <string>

namespace avcs {

// Base for every error the library raises. `kind()` is a short machine-readable tag.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what) : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what, int line = 0)
      : Error("config", line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

// Raised when a scenario cannot be evaluated, e.g. a node unreachable from an anchor.
class ScenarioError : public Error {
 public:
  explicit ScenarioError(const std::string& what) : Error("scenario", what) {}
};

}  // namespace avcs
