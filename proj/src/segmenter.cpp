#include "qmetric/segmenter.hpp"

namespace qmetric {

std::string_view to_string(SegmentKind kind) {
    switch (kind) {
    case SegmentKind::SL: return "SL";
    case SegmentKind::CL: return "CL";
    case SegmentKind::LL: return "LL";
    case SegmentKind::EL: return "EL";
    }
    return "?";
}

std::optional<SegmentKind> parse_segment_kind(std::string_view text) {
    if (text == "SL") return SegmentKind::SL;
    if (text == "CL") return SegmentKind::CL;
    if (text == "LL") return SegmentKind::LL;
    if (text == "EL") return SegmentKind::EL;
    return std::nullopt;
}

namespace {

void collect_units(const NodeList& nodes, const std::string& scope, std::vector<SegmentUnit>& out) {
    for (const auto& node : nodes) {
        if (const auto* fn = node.as<FunctionDef>()) {
            std::string inner = scope.empty() ? fn->name : scope + "::" + fn->name;
            collect_units(fn->body, inner, out);
        } else {
            out.push_back({scope, &node});
        }
    }
}

enum class RunGroup { Comment, Header, Other };

RunGroup group_of(StatementKind kind) {
    if (kind == StatementKind::Comment) return RunGroup::Comment;
    if (kind == StatementKind::HeaderInclude) return RunGroup::Header;
    return RunGroup::Other;
}

SegmentKind block_kind(const BlockNode& node) {
    if (node.as<ConditionBlock>()) return SegmentKind::CL;
    if (node.as<LoopBlock>()) return SegmentKind::LL;
    if (node.as<ExceptionBlock>()) return SegmentKind::EL;
    return SegmentKind::SL;
}

}  // namespace

std::vector<SegmentUnit> segment_units(const NodeList& tree) {
    std::vector<SegmentUnit> out;
    collect_units(tree, "", out);
    return out;
}

std::vector<CodeSegment> segment(const NodeList& tree) {
    std::vector<CodeSegment> out;
    std::optional<RunGroup> open_run;
    for (const auto& unit : segment_units(tree)) {
        const BlockNode& node = *unit.node;
        if (const auto* st = node.as<StatementNode>()) {
            RunGroup g = group_of(st->kind);
            if (open_run == g && out.back().scope == unit.scope) {
                out.back().nodes.push_back(node);
                out.back().span.last = node.span.last;
                continue;
            }
            out.push_back({SegmentKind::SL, unit.scope, {node}, node.span, 0});
            open_run = g;
            continue;
        }
        out.push_back({block_kind(node), unit.scope, {node}, node.span, 0});
        open_run.reset();
    }
    return out;
}

SegmentCounts segment_counts(std::span<const CodeSegment> segments) {
    SegmentCounts c;
    for (const auto& s : segments) {
        switch (s.kind) {
        case SegmentKind::SL: ++c.simple; break;
        case SegmentKind::CL: ++c.condition; break;
        case SegmentKind::LL: ++c.loop; break;
        case SegmentKind::EL: ++c.exception; break;
        }
    }
    c.total = segments.size();
    return c;
}

}  // namespace qmetric
