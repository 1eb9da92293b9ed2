#include "qmetric/error.hpp"

namespace qmetric {

std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::UnbalancedBraces: return "UnbalancedBraces";
    case ErrorCode::MalformedHeader: return "MalformedHeader";
    case ErrorCode::NegativeIterations: return "NegativeIterations";
    case ErrorCode::AttributeOutOfRange: return "AttributeOutOfRange";
    case ErrorCode::ZeroSegments: return "ZeroSegments";
    case ErrorCode::NonPositiveTime: return "NonPositiveTime";
    case ErrorCode::ScoreOutOfRange: return "ScoreOutOfRange";
    case ErrorCode::IncompleteRubric: return "IncompleteRubric";
    case ErrorCode::ConfigParse: return "ConfigParse";
    case ErrorCode::UnknownKey: return "UnknownKey";
    case ErrorCode::InvalidWeight: return "InvalidWeight";
    case ErrorCode::SidecarParse: return "SidecarParse";
    case ErrorCode::SidecarPartition: return "SidecarPartition";
    case ErrorCode::Io: return "Io";
    }
    return "Unknown";
}

namespace {

std::string decorate(ErrorCode code, const std::string& message, std::size_t line) {
    std::string out(to_string(code));
    if (line != 0)
        out += "(line " + std::to_string(line) + ")";
    out += ": ";
    out += message;
    return out;
}

}  // namespace

Error::Error(ErrorCode code, std::string message, std::size_t line)
    : std::runtime_error(decorate(code, message, line)), code_(code), line_(line) {}

}  // namespace qmetric
