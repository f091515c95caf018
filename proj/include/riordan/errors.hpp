#pragma once

#include <stdexcept>
#include <string>

namespace riordan {

// Error conditions raised by the exact-arithmetic kernel and the layers on
// top of it.  Everything derives from std::domain_error or
// std::invalid_argument so callers can handle whole classes at once.

struct DivisionByZero : std::domain_error {
    DivisionByZero() : std::domain_error("division by zero") {}
    explicit DivisionByZero(const std::string& what) : std::domain_error(what) {}
};

struct ExponentOverflow : std::overflow_error {
    ExponentOverflow() : std::overflow_error("monomial exponent overflow") {}
};

struct MultivariateInput : std::invalid_argument {
    explicit MultivariateInput(const std::string& what = "operation requires univariate input")
        : std::invalid_argument(what) {}
};

struct NonInvertibleConstantTerm : std::domain_error {
    NonInvertibleConstantTerm() : std::domain_error("series has no invertible constant term") {}
};

struct NonzeroInnerConstant : std::domain_error {
    NonzeroInnerConstant() : std::domain_error("inner series of a composition must have zero constant term") {}
};

struct NotRevertible : std::domain_error {
    NotRevertible() : std::domain_error("series is not revertible (needs c0 = 0 and invertible c1)") {}
};

struct BadConstantTerm : std::domain_error {
    explicit BadConstantTerm(const std::string& what) : std::domain_error(what) {}
};

struct TruncationTooShort : std::invalid_argument {
    explicit TruncationTooShort(const std::string& what = "series truncation order too short")
        : std::invalid_argument(what) {}
};

struct SingularMatrix : std::domain_error {
    SingularMatrix() : std::domain_error("matrix is singular") {}
};

struct InsufficientParams : std::invalid_argument {
    explicit InsufficientParams(const std::string& what = "Jacobi parameter sequences too short")
        : std::invalid_argument(what) {}
};

struct DepthExceedsParams : std::invalid_argument {
    DepthExceedsParams() : std::invalid_argument("continued-fraction depth exceeds available parameters") {}
};

struct InsufficientValues : std::invalid_argument {
    InsufficientValues() : std::invalid_argument("sequence too short for requested Hankel order") {}
};

struct IndexOutOfRange : std::out_of_range {
    explicit IndexOutOfRange(const std::string& what = "index out of range") : std::out_of_range(what) {}
};

}  // namespace riordan
