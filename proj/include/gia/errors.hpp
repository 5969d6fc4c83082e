#pragma once

#include <stdexcept>
#include <string>

namespace gia {

// Base of every error thrown by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Operation not defined for this kind of input (e.g. characters of a Cayley-table group).
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

// Malformed textual input. Carries the source name and line.
class ParseError : public Error {
 public:
  ParseError(const std::string& source, int line, const std::string& what)
      : Error(source + ":" + std::to_string(line) + ": " + what) {}
  explicit ParseError(const std::string& what) : Error(what) {}
};

// The twisted group algebra has no degree-inverting involution ([sigma]^2 != 1).
class NoInvolution : public Error {
 public:
  using Error::Error;
};

// The bicharacter is degenerate, so the graded division algebra is not central.
class NotCentral : public Error {
 public:
  using Error::Error;
};

// The given involution is not induced by any sesquilinear form.
class NotOfFormError : public Error {
 public:
  using Error::Error;
};

// The Gram matrix is neither symmetric nor skew under psi0-transpose.
class NotInvolutive : public Error {
 public:
  using Error::Error;
};

// A brute-force enumeration would exceed its configured guard.
class ResourceError : public Error {
 public:
  using Error::Error;
};

}  // namespace gia
