#pragma once

#include <stdexcept>
#include <string>

namespace cygro {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent caller input (bad words, mixed alphabets, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

/// A budget was exhausted: ball too small, too many vertices, etc.
/// The message names the resource that was missing.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// A tunable (K, M, ft_const) is too small for the hypothesis it encodes.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// An emitted result failed its oracle cross-check. Never ignored.
class VerificationError : public Error {
 public:
  using Error::Error;
};

/// Config file syntax/semantic problems, with location.
class ConfigError : public Error {
 public:
  ConfigError(const std::string& file, int line, int column, const std::string& what)
      : Error(file + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace cygro
