#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace fanobott {

// Base class for every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// --- forests ---------------------------------------------------------------

class InvalidForest : public Error {
public:
    using Error::Error;
};

class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

class SizeMismatch : public Error {
public:
    using Error::Error;
};

class ResourceBoundExceeded : public Error {
public:
    using Error::Error;
};

// --- fans -------------------------------------------------------------------

class NonPrimitiveColumn : public Error {
public:
    NonPrimitiveColumn(const std::string& what, int column)
        : Error(what), column(column) {}
    int column;
};

class NonUnimodularCone : public Error {
public:
    NonUnimodularCone(const std::string& what, std::vector<int> selection)
        : Error(what), selection(std::move(selection)) {}
    // selection[i] is 0 if v_i was chosen for the cone, 1 if w_i was.
    std::vector<int> selection;
};

class NoContainingCone : public Error {
public:
    using Error::Error;
};

class NotFano : public Error {
public:
    using Error::Error;
};

class AmbiguousRayMatch : public Error {
public:
    using Error::Error;
};

// --- series -----------------------------------------------------------------

class OrderMismatch : public Error {
public:
    using Error::Error;
};

class NonzeroConstantTerm : public Error {
public:
    using Error::Error;
};

class ConstantTermNotOne : public Error {
public:
    using Error::Error;
};

class ParityViolation : public Error {
public:
    using Error::Error;
};

class NonIntegerCoefficient : public Error {
public:
    using Error::Error;
};

// --- cacti ------------------------------------------------------------------

class MalformedCactus : public Error {
public:
    using Error::Error;
};

// --- io ---------------------------------------------------------------------

class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace fanobott
