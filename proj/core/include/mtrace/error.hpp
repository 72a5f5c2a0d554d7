#ifndef MTRACE_ERROR_HPP
#define MTRACE_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace mtrace
{

enum class ErrorCode {
    NegativeValuation,
    UnsupportedBackend,
    DivisionByZero,
    FieldMismatch,
    SingularCurve,
    NonIntegralModel,
    ZeroScale,
    ResidueRootNeeded,
    UnknownComponent,
    InconsistentMarking,
    NotCoprime,
    InvalidArgument,
    ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

// All library failures are reported through this type; the code is stable,
// the message is for humans.
class Error : public std::runtime_error
{
public:
    Error(ErrorCode code, const std::string &message);

    ErrorCode code() const noexcept
    {
        return code_;
    }

private:
    ErrorCode code_;
};

// Parse failures carry the 1-based line they were found on (0 when the input
// is a single literal).
class ParseError : public Error
{
public:
    ParseError(std::size_t line, const std::string &message);

    std::size_t line() const noexcept
    {
        return line_;
    }

private:
    std::size_t line_;
};

} // namespace mtrace

#endif
