#pragma once

#include <stdexcept>
#include <string>

namespace slp {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

#define SLP_DEFINE_ERROR(Name)                                                 \
  class Name : public Error {                                                  \
  public:                                                                      \
    explicit Name(const std::string& what) : Error(#Name ": " + what) {}       \
  }

SLP_DEFINE_ERROR(NotIrreducible);
SLP_DEFINE_ERROR(NotIsolating);
SLP_DEFINE_ERROR(DivisionByZero);
SLP_DEFINE_ERROR(FieldMismatch);
SLP_DEFINE_ERROR(UnsupportedType);
SLP_DEFINE_ERROR(BudgetExceeded);
SLP_DEFINE_ERROR(DimensionMismatch);
SLP_DEFINE_ERROR(HilbertMismatch);
SLP_DEFINE_ERROR(DegreeOutOfRange);
SLP_DEFINE_ERROR(ShapeUnsupported);
SLP_DEFINE_ERROR(LevelOutOfRange);
SLP_DEFINE_ERROR(NotInvariant);
SLP_DEFINE_ERROR(NotExact);

#undef SLP_DEFINE_ERROR

} // namespace slp
