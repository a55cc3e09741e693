#pragma once

#include <stdexcept>
#include <string>

namespace chernflop {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define CHERNFLOP_ERROR(Name)          \
  class Name : public Error {          \
   public:                             \
    using Error::Error;                \
  }

CHERNFLOP_ERROR(NotInvertible);
CHERNFLOP_ERROR(PrecisionError);
CHERNFLOP_ERROR(DegreeMismatch);
CHERNFLOP_ERROR(UnknownName);
CHERNFLOP_ERROR(NotSymmetric);
CHERNFLOP_ERROR(NotSU);
CHERNFLOP_ERROR(BadPartition);
CHERNFLOP_ERROR(ParseError);
CHERNFLOP_ERROR(ModelError);
// Two evaluation routes that must agree did not.
CHERNFLOP_ERROR(RouteMismatch);

#undef CHERNFLOP_ERROR

}  // namespace chernflop
