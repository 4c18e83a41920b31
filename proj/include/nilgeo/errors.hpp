#pragma once

#include <stdexcept>
#include <string>

namespace nilgeo {

/// Base for all errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Operand shapes do not match (matrix/vector/subspace dimensions).
class DimensionError : public Error {
public:
    explicit DimensionError(const std::string& msg) : Error(msg) {}
};

/// Inversion or metric construction hit a singular matrix.
class SingularError : public Error {
public:
    explicit SingularError(const std::string& msg) : Error(msg) {}
};

/// A structural invariant failed (antisymmetry, Jacobi, J^2=-I, ...).
/// `invariant()` names the violated condition for machine-readable reporting.
class ValidationError : public Error {
public:
    ValidationError(std::string invariant, const std::string& msg)
        : Error(msg), invariant_(std::move(invariant)) {}
    const std::string& invariant() const { return invariant_; }

private:
    std::string invariant_;
};

/// A catalog parameter violates its admissibility constraint.
class ConstraintError : public Error {
public:
    explicit ConstraintError(const std::string& msg) : Error(msg) {}
};

/// Malformed input document (JSON fragments, CLI patterns).
class ParseError : public Error {
public:
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

}  // namespace nilgeo
