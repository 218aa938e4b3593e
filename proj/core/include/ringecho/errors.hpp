#pragma once

#include <stdexcept>
#include <string>

namespace ringecho {

/// Invalid parameters or an ill-formed configuration.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// A request exceeds a configured resource budget (grid samples, sweep size).
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

/// Time integration produced a non-finite state; `time` is where it happened.
class IntegrationError : public std::runtime_error {
 public:
  IntegrationError(const std::string& what, double t)
      : std::runtime_error(what), time(t) {}
  double time;
};

}  // namespace ringecho
