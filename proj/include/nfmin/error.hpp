#pragma once

#include <stdexcept>
#include <string>

namespace nfmin {

// Every failure raised by the library derives from this type. The message is
// the short diagnostic printed by the CLI ("discriminant undefined", ...).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A floating comparison landed inside its guard band and was not decided.
class InconclusiveError : public Error {
 public:
  using Error::Error;
};

}  // namespace nfmin
