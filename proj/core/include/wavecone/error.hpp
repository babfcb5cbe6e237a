#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace wavecone {

/// Base class of every error raised by the library. `code()` is a short
/// machine-readable tag used by the command line runner.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

class InvalidState : public Error {
 public:
  explicit InvalidState(const std::string& m) : Error("invalid_state", m) {}
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& m) : Error("config", m) {}
};

class DomainTooSmall : public Error {
 public:
  explicit DomainTooSmall(const std::string& m) : Error("domain_too_small", m) {}
};

class RangeError : public Error {
 public:
  explicit RangeError(const std::string& m) : Error("range", m) {}
};

class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& m) : Error("precondition", m) {}
};

class AccuracyError : public Error {
 public:
  explicit AccuracyError(const std::string& m) : Error("accuracy", m) {}
};

class UndefinedFit : public Error {
 public:
  explicit UndefinedFit(const std::string& m) : Error("undefined_fit", m) {}
};

}  // namespace wavecone
