#ifndef KAL_ERROR_HPP
#define KAL_ERROR_HPP

#include <stdexcept>
#include <string>

namespace kal {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (rationals, JSON payloads).
struct ParseError : Error {
  using Error::Error;
};

/// Parameter outside the supported regime (strict-mode violations, bad primes, ...).
struct ParamError : Error {
  using Error::Error;
};

/// A configurable resource budget was exhausted (enumeration caps, node budgets).
struct BudgetError : Error {
  using Error::Error;
};

/// A solver could not produce a result it can vouch for.
struct SolveError : Error {
  using Error::Error;
};

/// Filesystem / compression failures.
struct IoError : Error {
  using Error::Error;
};

} // namespace kal

#endif // KAL_ERROR_HPP
