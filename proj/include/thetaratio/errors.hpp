#pragma once

#include <stdexcept>
#include <string>

namespace thetaratio {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

/// Two enclosures overlap, so their order cannot be decided.
class IndeterminateComparison : public Error {
 public:
  using Error::Error;
};

class ToleranceUnachievable : public Error {
 public:
  using Error::Error;
};

class PrecisionPropagationError : public Error {
 public:
  using Error::Error;
};

class DimensionTooLarge : public Error {
 public:
  using Error::Error;
};

/// The MacWilliams transform produced a non-integral or negative count.
class NonIntegerResult : public Error {
 public:
  using Error::Error;
};

class OddWeightPresent : public Error {
 public:
  using Error::Error;
};

class NotInSpan : public Error {
 public:
  using Error::Error;
};

class NonBracketing : public Error {
 public:
  using Error::Error;
};

class PreconditionViolation : public Error {
 public:
  using Error::Error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& origin, std::size_t line, const std::string& what)
      : Error(origin + ":" + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace thetaratio
