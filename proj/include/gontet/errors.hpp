#pragma once

#include <stdexcept>
#include <string>

namespace gontet {

/// Base class for every domain error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define GONTET_DEFINE_ERROR(Name)              \
  class Name : public Error {                  \
   public:                                     \
    using Error::Error;                        \
  }

GONTET_DEFINE_ERROR(NotAdmissible);
GONTET_DEFINE_ERROR(NotQAdmissible);
GONTET_DEFINE_ERROR(NotDivisible);
GONTET_DEFINE_ERROR(NonIntegral);
GONTET_DEFINE_ERROR(Singular);
GONTET_DEFINE_ERROR(OddArgument);
GONTET_DEFINE_ERROR(NonIntegerSpin);
GONTET_DEFINE_ERROR(Degenerate);
GONTET_DEFINE_ERROR(SizeLimit);
GONTET_DEFINE_ERROR(NumericInstability);

#undef GONTET_DEFINE_ERROR

}  // namespace gontet
