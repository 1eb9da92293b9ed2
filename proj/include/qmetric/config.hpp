#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qmetric/block_tree.hpp"
#include "qmetric/classifier.hpp"
#include "qmetric/impact.hpp"
#include "qmetric/metrics.hpp"

namespace qmetric {

enum class ReportFormat { Text, Json };

struct Config {
    WeightTable weights;
    FrontendOptions frontend;
    QualityAttributes qr;
    LevelRubric rubric;
    std::optional<ExecutionTimeModel> exec_time;
    std::size_t flow_exit_limit = 0;
    Rational flow_penalty = 1;
    ReportFormat format = ReportFormat::Text;
    // Defaults applied on the user's behalf (missing rubric answers, Qr).
    std::vector<std::string> diagnostics;
};

/// Config key for a statement kind, e.g. "header_include".
std::string_view weight_key(StatementKind kind);

/// YAML document with optional sections `weights`, `qr`, `rubric` and
/// `analysis`. Raises Error{ConfigParse}, Error{UnknownKey} or
/// Error{InvalidWeight}.
Config parse_config(std::string_view text);

/// Defaults when `path` is empty; Error{Io} if the file cannot be read.
Config load_config(const std::optional<std::filesystem::path>& path);

/// Effective table as `key = value` lines.
std::string dump_weights(const WeightTable& weights);

}  // namespace qmetric
