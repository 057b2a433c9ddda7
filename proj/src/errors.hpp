#pragma once

#include <stdexcept>
#include <string>

namespace qsphere {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
  using Error::Error;
};

// Invalid arguments or configuration (CLI exit code 2).
class UsageError : public Error {
public:
  using Error::Error;
};

// An oracle or suite precondition is unmet (CLI exit code 3).
class PreconditionError : public Error {
public:
  using Error::Error;
};

} // namespace qsphere
