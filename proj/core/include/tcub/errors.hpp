#pragma once

#include <stdexcept>
#include <string>

namespace tcub {

// Mathematical-domain error codes. CLI maps these to exit code 3.
enum class Errc {
    NotPrime,
    BadCharacteristic,
    ReducibleModulus,
    FieldTooSmall,
    FieldMismatch,
    DivisionByZero,
    ZeroModulus,
    DegreeMismatch,
    SingularMatrix,
    SingularForm,
    ZeroForm,
    BadLambda,
    DependentForms,
    NotOnQuadric,
    OsculatingLine,
    ZeroDirection,
    NonGenericLine,
    IntegralityViolation,
    UnclassifiableLine,
    SingularCurve,
    BoundExceeded,
    ParseError,
};

const char* errc_name(Errc c);

class MathError : public std::runtime_error {
public:
    MathError(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw MathError(code, what); }

} // namespace tcub
