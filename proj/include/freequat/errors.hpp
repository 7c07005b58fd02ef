#pragma once

#include <stdexcept>
#include <string>

namespace freequat {

/**
 * Error hierarchy.
 *
 * Every library error derives from Error and carries a stable short name in
 * addition to the human-readable message.  The CLI maps InputError (and its
 * descendants) to exit code 2 and prints the name, so the names are part of
 * the tool's interface and must not change casually.
 */
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& what)
        : std::runtime_error(what), name_(std::move(name)) {}
    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

/// Violated precondition or malformed input (CLI exit code 2).
class InputError : public Error {
public:
    explicit InputError(const std::string& what) : Error("InputError", what) {}

protected:
    InputError(std::string name, const std::string& what)
        : Error(std::move(name), what) {}
};

/// d (or n) has a square factor where a square-free value is required.
class NotSquareFree : public InputError {
public:
    explicit NotSquareFree(const std::string& what)
        : InputError("NotSquareFree", what) {}
};

/// Exact division by zero.
class DivisionByZero : public InputError {
public:
    explicit DivisionByZero(const std::string& what)
        : InputError("DivisionByZero", what) {}
};

/// Two operands live in Q(sqrt(d)) for different d.
class FieldMismatch : public InputError {
public:
    explicit FieldMismatch(const std::string& what)
        : InputError("FieldMismatch", what) {}
};

/// A quaternion operation that needs reduced norm ±1 got something else.
class NonUnit : public InputError {
public:
    explicit NonUnit(const std::string& what) : InputError("NonUnit", what) {}
};

/// A construction that needs a norm +1 fundamental solution got norm −1.
class NormMinusOne : public InputError {
public:
    explicit NormMinusOne(const std::string& what)
        : InputError("NormMinusOne", what) {}
};

/// Constructed coefficients leave the integral order.
class NonIntegral : public InputError {
public:
    explicit NonIntegral(const std::string& what)
        : InputError("NonIntegral", what) {}
};

/// A 2x2 complex matrix is neither real nor purely imaginary projectively.
class NotRealProjective : public InputError {
public:
    explicit NotRealProjective(const std::string& what)
        : InputError("NotRealProjective", what) {}
};

/// Mismatched generator/table sizes in a certificate check.
class ArityMismatch : public InputError {
public:
    explicit ArityMismatch(const std::string& what)
        : InputError("ArityMismatch", what) {}
};

} // namespace freequat
