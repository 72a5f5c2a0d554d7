#include <mtrace/error.hpp>

namespace mtrace
{

std::string_view to_string(ErrorCode code) noexcept
{
    switch (code) {
        case ErrorCode::NegativeValuation:
            return "NegativeValuation";
        case ErrorCode::UnsupportedBackend:
            return "UnsupportedBackend";
        case ErrorCode::DivisionByZero:
            return "DivisionByZero";
        case ErrorCode::FieldMismatch:
            return "FieldMismatch";
        case ErrorCode::SingularCurve:
            return "SingularCurve";
        case ErrorCode::NonIntegralModel:
            return "NonIntegralModel";
        case ErrorCode::ZeroScale:
            return "ZeroScale";
        case ErrorCode::ResidueRootNeeded:
            return "ResidueRootNeeded";
        case ErrorCode::UnknownComponent:
            return "UnknownComponent";
        case ErrorCode::InconsistentMarking:
            return "InconsistentMarking";
        case ErrorCode::NotCoprime:
            return "NotCoprime";
        case ErrorCode::InvalidArgument:
            return "InvalidArgument";
        case ErrorCode::ParseError:
            return "ParseError";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string &message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code)
{
}

ParseError::ParseError(std::size_t line, const std::string &message)
    : Error(ErrorCode::ParseError, line == 0 ? message : "line " + std::to_string(line) + ": " + message),
      line_(line)
{
}

} // namespace mtrace
