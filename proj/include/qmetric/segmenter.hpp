#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qmetric/block_tree.hpp"
#include "qmetric/rational.hpp"

namespace qmetric {

enum class SegmentKind { SL, CL, LL, EL };

std::string_view to_string(SegmentKind kind);
std::optional<SegmentKind> parse_segment_kind(std::string_view text);

struct CodeSegment {
    SegmentKind kind = SegmentKind::SL;
    // Enclosing function path ("" for file scope).
    std::string scope;
    NodeList nodes;
    LineSpan span;
    Rational impact = 0;
};

/// One segmentable top-level node: a file-scope node that is not a function,
/// or a node directly inside a function body.
struct SegmentUnit {
    std::string scope;
    const BlockNode* node = nullptr;
};

/// Function bodies are flattened recursively; the returned pointers refer
/// into `tree`.
std::vector<SegmentUnit> segment_units(const NodeList& tree);

/// Default partition: CL/LL/EL per block, maximal same-group statement runs
/// for SL with groups {Comment}, {HeaderInclude}, {everything else}.
std::vector<CodeSegment> segment(const NodeList& tree);

struct SegmentCounts {
    std::size_t simple = 0;     // n1
    std::size_t condition = 0;  // n2
    std::size_t loop = 0;       // n3
    std::size_t exception = 0;  // n4
    std::size_t total = 0;      // N

    friend bool operator==(const SegmentCounts&, const SegmentCounts&) = default;
};

SegmentCounts segment_counts(std::span<const CodeSegment> segments);

/// One `startLine endLine KIND` line of a `.segments` sidecar.
struct SegmentOverride {
    LineSpan lines;
    SegmentKind kind = SegmentKind::SL;
    std::size_t source_line = 0;
};

/// Blank lines and `#` comments are ignored. Raises Error{SidecarParse}.
std::vector<SegmentOverride> parse_sidecar(std::string_view text);

/// Re-draws the partition from the sidecar ranges. Every unit must fall
/// inside exactly one range, ranges may not overlap, straddle a unit, cover
/// no unit, or mix scopes. Raises Error{SidecarPartition}.
std::vector<CodeSegment> apply_overrides(const NodeList& tree, std::span<const SegmentOverride> overrides);

}  // namespace qmetric
