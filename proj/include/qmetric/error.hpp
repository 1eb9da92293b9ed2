#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qmetric {

enum class ErrorCode {
    UnbalancedBraces,
    MalformedHeader,
    NegativeIterations,
    AttributeOutOfRange,
    ZeroSegments,
    NonPositiveTime,
    ScoreOutOfRange,
    IncompleteRubric,
    ConfigParse,
    UnknownKey,
    InvalidWeight,
    SidecarParse,
    SidecarPartition,
    Io,
};

std::string_view to_string(ErrorCode code);

/// Every failure in the library is reported through this type. `line` is
/// 1-based and 0 when the error has no source position.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, std::string message, std::size_t line = 0);

    ErrorCode code() const noexcept { return code_; }
    std::size_t line() const noexcept { return line_; }

private:
    ErrorCode code_;
    std::size_t line_;
};

struct Diagnostic {
    std::size_t line = 0;
    std::string message;

    friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

}  // namespace qmetric
