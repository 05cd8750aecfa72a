#pragma once

#include <stdexcept>
#include <string>

namespace qhopf {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class FieldMismatch : public Error {
 public:
  using Error::Error;
};

class NotInvertible : public Error {
 public:
  using Error::Error;
};

class NotBijective : public Error {
 public:
  using Error::Error;
};

class AntipodeNotInvertible : public Error {
 public:
  using Error::Error;
};

class NotNormalizable : public Error {
 public:
  using Error::Error;
};

class CocycleInvalid : public Error {
 public:
  using Error::Error;
};

class BadCharacteristic : public Error {
 public:
  using Error::Error;
};

class RankMismatch : public Error {
 public:
  using Error::Error;
};

/// Raised when a constructed object fails its own axiom suite.
class ValidationFailed : public Error {
 public:
  ValidationFailed(std::string axiom, std::string witness)
      : Error("validation failed: " + axiom + " at " + witness),
        axiom_(std::move(axiom)),
        witness_(std::move(witness)) {}

  const std::string& axiom() const { return axiom_; }
  const std::string& witness() const { return witness_; }

 private:
  std::string axiom_;
  std::string witness_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& field, const std::string& what)
      : Error("parse error in '" + field + "': " + what), field_(field) {}

  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

}  // namespace qhopf
