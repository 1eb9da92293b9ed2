#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qmetric/config.hpp"
#include "qmetric/segmenter.hpp"

namespace qmetric {

struct LoopRecord {
    std::size_t line = 0;
    LoopKind loop = LoopKind::For;
    IterationCount count;
};

struct FileReport {
    std::string path;
    bool ok = true;
    std::string error;
    std::size_t total_lines = 0;
    std::size_t raw_loc = 0;  // non-blank physical lines
    std::size_t unknown_chars = 0;
    bool sidecar_applied = false;
    std::vector<CodeSegment> segments;
    std::vector<LoopRecord> loops;
    SegmentCounts counts;
    Rational code_area = 0;
    FlowReport flow;
    std::vector<Diagnostic> diagnostics;
};

struct AggregateReport {
    std::size_t files_analyzed = 0;
    std::size_t files_failed = 0;
    std::size_t raw_loc = 0;
    SegmentCounts counts;
    Rational code_area = 0;
    std::optional<Rational> execution_time_s;
    int qr = 0;
    Rational qr_normalized = 0;
    std::optional<Rational> efficiency;
    Rational percentage_of_baseline = 0;
    bool meets_threshold = false;
    FlowReport flow;
    Rational level_score = 0;
    QualityLevel level;
};

struct AnalysisReport {
    std::vector<FileReport> files;
    AggregateReport aggregate;
    std::vector<std::string> diagnostics;
};

struct SourceInput {
    std::string path;
    std::string text;
    std::optional<std::string> sidecar;
    std::optional<std::string> read_error;
};

/// Never throws for source problems; failures land in FileReport::error.
FileReport analyze_source(const SourceInput& input, const Config& config);

/// Aggregates already-analyzed files; per-file order is kept.
AnalysisReport assemble_report(std::vector<FileReport> files, const Config& config);

/// Files are analyzed on up to `threads` workers (0 = hardware concurrency).
AnalysisReport analyze_sources(std::span<const SourceInput> inputs, const Config& config,
                               unsigned threads = 0);

/// Reads each path ("-" is standard input). A sidecar is taken from
/// `sidecars` when present, else from `<path>.segments` if that file exists.
std::vector<SourceInput> read_sources(std::span<const std::string> paths,
                                      const std::map<std::string, std::string>& sidecars = {});

AnalysisReport analyze(std::span<const std::string> paths, const Config& config,
                       const std::map<std::string, std::string>& sidecars = {});

}  // namespace qmetric
