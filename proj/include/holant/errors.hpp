#pragma once

#include <stdexcept>
#include <string>

namespace holant {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed text input (files, literals, flags).
struct ParseError : Error {
  using Error::Error;
};

// A documented precondition of an operation does not hold.
struct DomainError : Error {
  using Error::Error;
};

// An explicit size limit would be exceeded.
struct ResourceLimit : Error {
  using Error::Error;
};

// The question has an answer over C but it cannot be decided inside Q(i).
struct Undecidable : Error {
  explicit Undecidable(const std::string& what) : Error("undecidable in field: " + what) {}
};

struct InternalError : Error {
  using Error::Error;
};

}  // namespace holant
