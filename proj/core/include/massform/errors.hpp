#pragma once

#include <stdexcept>
#include <string>

namespace massform {

/// Base class of every error raised by the library. `name()` is the stable
/// machine-readable identifier used in CLI error objects.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    virtual const char* name() const noexcept { return "Error"; }
};

/// Bad input: malformed fields, inconsistent ramification data, requests
/// outside an operation's domain.
class ValidationError : public Error {
public:
    using Error::Error;
    const char* name() const noexcept override { return "ValidationError"; }
};

/// A theorem-level identity failed to hold. Never expected for valid input.
class InternalConsistencyError : public Error {
public:
    using Error::Error;
    const char* name() const noexcept override { return "InternalConsistencyError"; }
};

#define MASSFORM_DEFINE_ERROR(Name, Base)                                   \
    class Name : public Base {                                              \
    public:                                                                 \
        using Base::Base;                                                   \
        const char* name() const noexcept override { return #Name; }        \
    }

MASSFORM_DEFINE_ERROR(DivisionByZeroError, ValidationError);
MASSFORM_DEFINE_ERROR(PoleError, ValidationError);
MASSFORM_DEFINE_ERROR(NotExpandableError, ValidationError);
MASSFORM_DEFINE_ERROR(OrderMismatchError, ValidationError);
MASSFORM_DEFINE_ERROR(ParseError, ValidationError);

MASSFORM_DEFINE_ERROR(InvalidFieldDefinitionError, ValidationError);
MASSFORM_DEFINE_ERROR(NotAUnitError, ValidationError);
MASSFORM_DEFINE_ERROR(PrecisionMismatchError, ValidationError);
MASSFORM_DEFINE_ERROR(PrecisionExhaustedError, ValidationError);

MASSFORM_DEFINE_ERROR(InvalidFieldError, ValidationError);
MASSFORM_DEFINE_ERROR(NoSuchPlaceError, ValidationError);

MASSFORM_DEFINE_ERROR(InvalidRamificationError, ValidationError);
MASSFORM_DEFINE_ERROR(NotDefiniteError, ValidationError);
MASSFORM_DEFINE_ERROR(DefiniteError, ValidationError);
MASSFORM_DEFINE_ERROR(NegativeMultiplicityError, ValidationError);
MASSFORM_DEFINE_ERROR(InvalidPartialDataError, ValidationError);

MASSFORM_DEFINE_ERROR(NotDivisibleError, ValidationError);
MASSFORM_DEFINE_ERROR(BruteForceTooLargeError, ValidationError);

#undef MASSFORM_DEFINE_ERROR

}  // namespace massform
