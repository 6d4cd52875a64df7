#ifndef HOMCODE_ERROR_HPP
#define HOMCODE_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace homcode {

enum class ErrorKind {
    NotPrime,
    Reducible,
    DegreeMismatch,
    DivisionByZero,
    RingMismatch,
    IndexOutOfRange,
    NotInSocle,
    DimensionMismatch,
    LengthMismatch,
    TooLarge,
    CodeTooSmall,
    NegativeDelta,
    SubtypeLengthMismatch,
    BadReplication,
    HeightOutOfRange,
    ParameterViolation,
    Parse,
};

constexpr std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NotPrime: return "NotPrime";
        case ErrorKind::Reducible: return "Reducible";
        case ErrorKind::DegreeMismatch: return "DegreeMismatch";
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::RingMismatch: return "RingMismatch";
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::NotInSocle: return "NotInSocle";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::LengthMismatch: return "LengthMismatch";
        case ErrorKind::TooLarge: return "TooLarge";
        case ErrorKind::CodeTooSmall: return "CodeTooSmall";
        case ErrorKind::NegativeDelta: return "NegativeDelta";
        case ErrorKind::SubtypeLengthMismatch: return "SubtypeLengthMismatch";
        case ErrorKind::BadReplication: return "BadReplication";
        case ErrorKind::HeightOutOfRange: return "HeightOutOfRange";
        case ErrorKind::ParameterViolation: return "ParameterViolation";
        case ErrorKind::Parse: return "Parse";
    }
    return "Unknown";
}

/// Library-wide exception. The kind is stable and drives CLI exit codes.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace homcode

#endif
