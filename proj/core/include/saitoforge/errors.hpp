#pragma once

#include <stdexcept>
#include <string>

namespace sf {

// Base of every error raised by the library. name() is the stable identifier
// printed by the command line front end.
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& what)
      : std::runtime_error(name + ": " + what), name_(std::move(name)) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

#define SF_DEFINE_ERROR(Name)                                      \
  class Name : public Error {                                      \
   public:                                                         \
    explicit Name(const std::string& what) : Error(#Name, what) {} \
  };

SF_DEFINE_ERROR(DivisionByZero)
SF_DEFINE_ERROR(NotDivisible)
SF_DEFINE_ERROR(Inconsistent)
SF_DEFINE_ERROR(RingMismatch)
SF_DEFINE_ERROR(UnsupportedGroup)
SF_DEFINE_ERROR(ReducibleGroup)
SF_DEFINE_ERROR(NotInvariant)
SF_DEFINE_ERROR(ZeroProjection)
SF_DEFINE_ERROR(FlatnessViolation)
SF_DEFINE_ERROR(PropertyViolation)
SF_DEFINE_ERROR(AssumptionViolated)
SF_DEFINE_ERROR(NonIntegrable)
SF_DEFINE_ERROR(SingularU)
SF_DEFINE_ERROR(SingularTwist)
SF_DEFINE_ERROR(SingularP)
SF_DEFINE_ERROR(NotRegular)
SF_DEFINE_ERROR(NotPolynomial)
SF_DEFINE_ERROR(NotEquivariant)
SF_DEFINE_ERROR(RegularityFailure)
SF_DEFINE_ERROR(TableMismatch)
SF_DEFINE_ERROR(ParseError)
SF_DEFINE_ERROR(SchemaMismatch)

#undef SF_DEFINE_ERROR

}  // namespace sf
