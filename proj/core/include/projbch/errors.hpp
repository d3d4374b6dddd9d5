#pragma once

#include <stdexcept>
#include <string>

namespace projbch {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A parameter violates a documented precondition (composite p, delta out of
// range, index past the end, mismatched word lengths, ...).
class InvalidParameter : public Error {
public:
    using Error::Error;
};

// Two operands belong to different field instances.
class FieldMismatch : public Error {
public:
    using Error::Error;
};

class DivisionByZero : public Error {
public:
    using Error::Error;
};

// The requested order is not the order of a subfield of this field.
class NotASubfield : public Error {
public:
    using Error::Error;
};

// The operation is not defined for these parameters (even characteristic,
// q != 3 closed forms, sizes past the supported range, ...).
class Unsupported : public Error {
public:
    using Error::Error;
};

// Finishing the computation would exceed an enumeration cap or search budget.
class CapExceeded : public Error {
public:
    using Error::Error;
};

// An internal deterministic search failed. Indicates a bug for supported sizes.
class ConstructionFailure : public Error {
public:
    using Error::Error;
};

} // namespace projbch
