#pragma once

#include <array>
#include <optional>
#include <span>
#include <string_view>

#include "qmetric/block_tree.hpp"
#include "qmetric/rational.hpp"

namespace qmetric {

struct FlowReport {
    std::size_t backward_jumps = 0;
    // Forward gotos plus every break/continue beyond the first in one loop.
    std::size_t unstructured_exits = 0;
    bool orderly = true;

    friend bool operator==(const FlowReport&, const FlowReport&) = default;
};

/// `tokens` is the raw stream the tree was built from; labels and gotos are
/// read from it, per-loop exits from the tree.
FlowReport flow_orderliness(const NodeList& tree, std::span<const Token> tokens, std::size_t exit_limit = 0);

/// Recomputes `orderly` for a combined report.
FlowReport merge_flow(std::span<const FlowReport> parts, std::size_t exit_limit);

enum class RubricQuestion {
    SegmentFlow,
    ObjectReuse,
    Commenting,
    ErrorControls,
    SecurityCustomization,
};

inline constexpr std::array<RubricQuestion, 5> kRubricQuestions = {
    RubricQuestion::SegmentFlow, RubricQuestion::ObjectReuse, RubricQuestion::Commenting,
    RubricQuestion::ErrorControls, RubricQuestion::SecurityCustomization,
};

/// Config key for a question, e.g. "segment_flow".
std::string_view to_string(RubricQuestion q);

struct LevelRubric {
    std::array<std::optional<int>, 5> answers{};

    std::optional<int>& operator[](RubricQuestion q) { return answers[static_cast<std::size_t>(q)]; }
    const std::optional<int>& operator[](RubricQuestion q) const {
        return answers[static_cast<std::size_t>(q)];
    }
};

/// Sum of answers, minus `penalty` when flow is not orderly, clamped to
/// [0, 10]. Raises Error{IncompleteRubric} or Error{AttributeOutOfRange}.
Rational rubric_score(const LevelRubric& rubric, const FlowReport& flow, const Rational& penalty = 1);

struct QualityLevel {
    int level = 4;
    Rational low;
    Rational high;
    bool high_inclusive = false;
    // False when the score sits in a stretch the four published ranges leave
    // unassigned (8-8.5, 6-6.5).
    bool in_literal_range = false;
};

/// Level 1 [8.5,10], 2 [6.5,8.5), 3 [4.5,6.5), 4 [0,4.5).
/// Raises Error{ScoreOutOfRange}.
QualityLevel classify_level(const Rational& score);

}  // namespace qmetric
