#pragma once

#include <stdexcept>
#include <string>

namespace trigvee {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define TRIGVEE_DEFINE_ERROR(Name)          \
  class Name : public Error {               \
   public:                                  \
    using Error::Error;                     \
  }

// core-arith
TRIGVEE_DEFINE_ERROR(SingularMatrix);
TRIGVEE_DEFINE_ERROR(DimensionMismatch);
TRIGVEE_DEFINE_ERROR(ParseError);

// configuration
TRIGVEE_DEFINE_ERROR(InvalidConfiguration);
TRIGVEE_DEFINE_ERROR(MixedClass);
TRIGVEE_DEFINE_ERROR(NoGenericFunctional);

// veesystem
TRIGVEE_DEFINE_ERROR(NotProportional);
TRIGVEE_DEFINE_ERROR(ZeroG2);
TRIGVEE_DEFINE_ERROR(NotEigen);

// restriction
TRIGVEE_DEFINE_ERROR(CDeltaZero);
TRIGVEE_DEFINE_ERROR(DegenerateRestrictedGram);
TRIGVEE_DEFINE_ERROR(EmptyChild);

// families
TRIGVEE_DEFINE_ERROR(UnsupportedParams);
TRIGVEE_DEFINE_ERROR(DegenerateParams);
TRIGVEE_DEFINE_ERROR(NoATable);

// wdvv-numeric
TRIGVEE_DEFINE_ERROR(PoleTooClose);

#undef TRIGVEE_DEFINE_ERROR

}  // namespace trigvee
