#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace grouptype {

// Root of every error the library raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DomainMismatch : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public Error {
 public:
  CapExceeded(std::uint64_t cap)
      : Error("closure exceeded cap of " + std::to_string(cap) + " elements"), cap_(cap) {}
  std::uint64_t cap() const { return cap_; }

 private:
  std::uint64_t cap_;
};

class ElementNotInGroup : public Error {
 public:
  using Error::Error;
};

class MalformedElement : public Error {
 public:
  using Error::Error;
};

// Constructor argument errors.
class InvalidParameter : public Error {
 public:
  using Error::Error;
};
class OddOrder : public InvalidParameter {
 public:
  using InvalidParameter::InvalidParameter;
};
class NotMultipleOfFour : public InvalidParameter {
 public:
  using InvalidParameter::InvalidParameter;
};
class TooSmall : public InvalidParameter {
 public:
  using InvalidParameter::InvalidParameter;
};
class DegreeOutOfRange : public InvalidParameter {
 public:
  using InvalidParameter::InvalidParameter;
};
class NotPrime : public InvalidParameter {
 public:
  using InvalidParameter::InvalidParameter;
};

// Semidirect action validation. The message names the law that failed.
class ActionError : public Error {
 public:
  using Error::Error;
};
class NotAnAutomorphism : public ActionError {
 public:
  using ActionError::ActionError;
};
class InconsistentAction : public ActionError {
 public:
  using ActionError::ActionError;
};
class NotABijection : public ActionError {
 public:
  using ActionError::ActionError;
};

class OrderOverflow : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::string source, int line, const std::string& what)
      : Error(source + ":" + std::to_string(line) + ": " + what),
        source_(std::move(source)),
        line_(line) {}
  const std::string& source() const { return source_; }
  int line() const { return line_; }

 private:
  std::string source_;
  int line_;
};

class NegativeCount : public Error {
 public:
  using Error::Error;
};

class CountOverflow : public Error {
 public:
  CountOverflow(std::uint64_t divisor)
      : Error("exponent-type count overflows 64 bits at divisor " + std::to_string(divisor)),
        divisor_(divisor) {}
  std::uint64_t divisor() const { return divisor_; }

 private:
  std::uint64_t divisor_;
};

class KindMismatch : public Error {
 public:
  using Error::Error;
};

class CatalogError : public Error {
 public:
  using Error::Error;
};

class FingerprintMismatch : public CatalogError {
 public:
  FingerprintMismatch(std::string label, std::string expected, std::string actual)
      : CatalogError("fingerprint mismatch for " + label + ": expected " + expected + ", got " +
                     actual),
        label_(std::move(label)),
        expected_(std::move(expected)),
        actual_(std::move(actual)) {}
  const std::string& label() const { return label_; }
  const std::string& expected() const { return expected_; }
  const std::string& actual() const { return actual_; }

 private:
  std::string label_;
  std::string expected_;
  std::string actual_;
};

class UnknownTarget : public Error {
 public:
  using Error::Error;
};

}  // namespace grouptype
