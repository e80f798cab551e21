#pragma once

#include <stdexcept>
#include <string>

namespace asymel {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A material parameter violates its admissible range (e.g. C11 <= 0).
class InvalidParameter : public Error {
 public:
  using Error::Error;
};

/// A diagonal block of the stiffness matrix is singular or too badly conditioned.
class SingularMaterial : public Error {
 public:
  using Error::Error;
};

class InvalidPlaneMaterial : public Error {
 public:
  using Error::Error;
};

/// The sampled angles admit a larger invariant family than generic angles do.
class DegenerateSampling : public Error {
 public:
  using Error::Error;
};

/// A field was evaluated (or a stencil reached) outside its domain.
class DomainViolation : public Error {
 public:
  using Error::Error;
};

class RequiresClassical : public Error {
 public:
  using Error::Error;
};

class IoFailure : public Error {
 public:
  using Error::Error;
};

/// Grid specification or command-line value that cannot be interpreted.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Material-definition file errors. `kind()` tells which rule was broken;
/// `key()` holds the offending key and `line()` the 1-based line (0 if n/a).
class ParseError : public Error {
 public:
  enum class Kind { MissingKey, UnknownKey, DuplicateKey, MalformedNumber, AmbiguousKind };

  ParseError(Kind kind, std::string key, int line, const std::string& message)
      : Error(message), kind_(kind), key_(std::move(key)), line_(line) {}

  Kind kind() const noexcept { return kind_; }
  const std::string& key() const noexcept { return key_; }
  int line() const noexcept { return line_; }

 private:
  Kind kind_;
  std::string key_;
  int line_;
};

}  // namespace asymel
