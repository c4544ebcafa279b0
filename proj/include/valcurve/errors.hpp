#ifndef VALCURVE_ERRORS_HPP
#define VALCURVE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace valcurve {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A comparison or certification that cannot be decided at the current
// truncation level of a Laurent backend.
struct PrecisionExhausted : Error {
    explicit PrecisionExhausted(const std::string& msg) : Error(msg) {}
};

struct NotIntegral : Error {
    explicit NotIntegral(const std::string& msg) : Error(msg) {}
};

struct OddValuation : Error {
    explicit OddValuation(const std::string& msg) : Error(msg) {}
};

struct NotASquare : Error {
    explicit NotASquare(const std::string& msg) : Error(msg) {}
};

// The exact backend cannot represent the requested value (e.g. an
// irrational square root of a rational).
struct NotRepresentable : Error {
    explicit NotRepresentable(const std::string& msg) : Error(msg) {}
};

struct UnsupportedRamification : Error {
    explicit UnsupportedRamification(const std::string& msg) : Error(msg) {}
};

struct DuplicateSymbol : Error {
    explicit DuplicateSymbol(const std::string& msg) : Error(msg) {}
};

struct NotIntegralAfterScaling : Error {
    explicit NotIntegralAfterScaling(const std::string& msg) : Error(msg) {}
};

struct CurveMismatch : Error {
    explicit CurveMismatch(const std::string& msg) : Error(msg) {}
};

struct NotOnCurve : Error {
    explicit NotOnCurve(const std::string& msg) : Error(msg) {}
};

struct DivisionByZero : Error {
    explicit DivisionByZero(const std::string& msg) : Error(msg) {}
};

struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t pos)
        : Error(msg + " (at offset " + std::to_string(pos) + ")"), offset(pos) {}
    std::size_t offset;
};

}  // namespace valcurve

#endif
