#pragma once

#include <stdexcept>
#include <string>

namespace kskit {

/// Base of the toolkit's recoverable errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text (data files, DIMACS, ray literals).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A builtin set name that the catalog does not know.
class UnknownSet : public Error {
 public:
  using Error::Error;
};

/// A known set whose data file is not installed.
class DataUnavailable : public Error {
 public:
  using Error::Error;
};

}  // namespace kskit
