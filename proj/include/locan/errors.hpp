#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace locan {

/// Input lies outside the mathematical domain of an operation
/// (a vector that is not a root, a coordinate outside the model group, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Requested configuration is not supported (type/rank, realization).
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured safety cap (Weyl group order, oracle degree) was hit.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ConfigIssue {
  int line = 0;  // 0 when the issue is not tied to a line
  std::string message;
};

/// Carries every schema violation found in a config, not just the first.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(std::vector<ConfigIssue> issues);

  const std::vector<ConfigIssue>& issues() const { return issues_; }

 private:
  std::vector<ConfigIssue> issues_;
};

}  // namespace locan
