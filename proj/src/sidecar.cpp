#include <algorithm>
#include <charconv>
#include <sstream>

#include "qmetric/segmenter.hpp"

namespace qmetric {

namespace {

std::optional<std::size_t> parse_line_number(std::string_view text) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || value == 0)
        return std::nullopt;
    return value;
}

}  // namespace

std::vector<SegmentOverride> parse_sidecar(std::string_view text) {
    std::vector<SegmentOverride> out;
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        if (auto hash = raw.find('#'); hash != std::string::npos)
            raw.erase(hash);
        std::istringstream fields(raw);
        std::vector<std::string> parts;
        for (std::string f; fields >> f;)
            parts.push_back(f);
        if (parts.empty())
            continue;
        if (parts.size() != 3)
            throw Error(ErrorCode::SidecarParse, "expected 'startLine endLine KIND'", lineno);
        auto first = parse_line_number(parts[0]);
        auto last = parse_line_number(parts[1]);
        auto kind = parse_segment_kind(parts[2]);
        if (!first || !last)
            throw Error(ErrorCode::SidecarParse, "line numbers must be positive integers", lineno);
        if (*last < *first)
            throw Error(ErrorCode::SidecarParse, "endLine before startLine", lineno);
        if (!kind)
            throw Error(ErrorCode::SidecarParse, "unknown segment kind '" + parts[2] + "'", lineno);
        out.push_back({{*first, *last}, *kind, lineno});
    }
    return out;
}

std::vector<CodeSegment> apply_overrides(const NodeList& tree, std::span<const SegmentOverride> overrides) {
    std::vector<SegmentOverride> ranges(overrides.begin(), overrides.end());
    std::sort(ranges.begin(), ranges.end(),
              [](const auto& a, const auto& b) { return a.lines.first < b.lines.first; });
    for (std::size_t i = 1; i < ranges.size(); ++i)
        if (ranges[i - 1].lines.overlaps(ranges[i].lines))
            throw Error(ErrorCode::SidecarPartition, "segment ranges overlap", ranges[i].source_line);

    std::vector<CodeSegment> out;
    out.reserve(ranges.size());
    for (const auto& r : ranges)
        out.push_back({r.kind, "", {}, r.lines, 0});
    std::vector<bool> scoped(ranges.size(), false);

    for (const auto& unit : segment_units(tree)) {
        const LineSpan& span = unit.node->span;
        auto it = std::find_if(ranges.begin(), ranges.end(),
                               [&](const auto& r) { return r.lines.overlaps(span); });
        if (it == ranges.end())
            throw Error(ErrorCode::SidecarPartition,
                        "lines " + std::to_string(span.first) + "-" + std::to_string(span.last) +
                            " are not covered by any segment",
                        span.first);
        if (!it->lines.contains(span))
            throw Error(ErrorCode::SidecarPartition, "segment boundary splits a statement or block",
                        it->source_line);
        auto idx = static_cast<std::size_t>(it - ranges.begin());
        CodeSegment& seg = out[idx];
        if (scoped[idx] && seg.scope != unit.scope)
            throw Error(ErrorCode::SidecarPartition, "segment crosses a function boundary",
                        it->source_line);
        seg.scope = unit.scope;
        scoped[idx] = true;
        seg.nodes.push_back(*unit.node);
    }
    for (std::size_t i = 0; i < out.size(); ++i)
        if (out[i].nodes.empty())
            throw Error(ErrorCode::SidecarPartition, "segment covers no code", ranges[i].source_line);
    // Shrink each span to the code it owns so the partition invariant holds.
    for (auto& seg : out)
        seg.span = {seg.nodes.front().span.first, seg.nodes.back().span.last};
    return out;
}

}  // namespace qmetric
