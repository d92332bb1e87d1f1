#pragma once

#include <stdexcept>
#include <string>

namespace mtinv {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define MTINV_DEFINE_ERROR(Name)            \
  class Name : public Error {               \
   public:                                  \
    using Error::Error;                     \
  }

MTINV_DEFINE_ERROR(DimensionMismatch);
MTINV_DEFINE_ERROR(InvalidGroup);
MTINV_DEFINE_ERROR(RelationViolation);
MTINV_DEFINE_ERROR(SizeGuard);
MTINV_DEFINE_ERROR(CompositionMismatch);
MTINV_DEFINE_ERROR(NotATorus);
MTINV_DEFINE_ERROR(UnknownConstruction);
MTINV_DEFINE_ERROR(InvalidSubgroup);
MTINV_DEFINE_ERROR(ParseError);
MTINV_DEFINE_ERROR(SchemaError);
MTINV_DEFINE_ERROR(ValidationError);

// The two failures below indicate a bug in this library, never bad input.
MTINV_DEFINE_ERROR(CrossCheckFailure);
MTINV_DEFINE_ERROR(ExactnessFailure);

#undef MTINV_DEFINE_ERROR

}  // namespace mtinv
