#pragma once

#include <stdexcept>
#include <string>

namespace enumkit {

/// Misuse of an API contract (stepping a finished enumerator, bad arguments).
class usage_error : public std::logic_error {
 public:
  explicit usage_error(const std::string& what) : std::logic_error(what) {}
};

/// A component lacks an optional capability (e.g. snapshotting).
class capability_error : public std::runtime_error {
 public:
  explicit capability_error(const std::string& what) : std::runtime_error(what) {}
};

/// A callee broke its declared contract (duplicate solution, non-member draw,
/// inconsistent extension oracle).
class contract_error : public std::runtime_error {
 public:
  explicit contract_error(const std::string& what) : std::runtime_error(what) {}
};

/// A caller-asserted time bound was observed to be false at run time.
class bound_violation_error : public std::runtime_error {
 public:
  explicit bound_violation_error(const std::string& what) : std::runtime_error(what) {}
};

/// The dense-interval precondition of the stock scheme failed operationally.
class density_violation_error : public std::runtime_error {
 public:
  explicit density_violation_error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input text; carries a 1-based line number.
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& what, std::size_t line)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// An instance exceeds the configured size cap.
class instance_too_large_error : public std::runtime_error {
 public:
  explicit instance_too_large_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace enumkit
