#pragma once

#include <stdexcept>
#include <string>

namespace qext {

enum class Errc {
    NotPrime,
    EvenCharacteristic,
    ZeroInverse,
    ZeroCoefficient,
    DimensionMismatch,
    DegenerateForm,
    ZeroLevel,
    GridTooLarge,
    BadExponent,
    SurfaceMismatch,
    EmptyFamily,
    BadTheta,
    DegenerateDenominator,
    SizeTooLarge,
    SetTooLarge,
    BudgetExceeded,
    ConfigError,
};

const char* errc_name(Errc code);

/// Library error carrying a machine-checkable code alongside the message.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
    throw Error(code, what);
}

}  // namespace qext
