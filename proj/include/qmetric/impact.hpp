#pragma once

#include <array>
#include <span>

#include "qmetric/block_tree.hpp"
#include "qmetric/rational.hpp"
#include "qmetric/segmenter.hpp"

namespace qmetric {

/// Non-negative exact score.
using ImpactScore = Rational;

/// Per-kind impact weights on the 0..1 scale. Defaults: Comment 0.5,
/// HeaderInclude 0.7, Declaration 0.1, InitTermination 0.2,
/// SimpleAssignment 0.3, ComplexAssignment 0.5, Expression, FunctionCall and
/// Return 0.8.
class WeightTable {
public:
    WeightTable();

    const Rational& operator[](StatementKind kind) const {
        return weights_[static_cast<std::size_t>(kind)];
    }

    /// Raises Error{InvalidWeight} outside [0, 1].
    void set(StatementKind kind, const Rational& weight);

    bool exception_multiplier_enabled = true;

private:
    std::array<Rational, kStatementKindCount> weights_;
};

ImpactScore statement_impact(StatementKind kind, const WeightTable& weights);
ImpactScore simple_run_impact(std::span<const BlockNode> run, const WeightTable& weights);
ImpactScore loop_impact(const LoopBlock& loop, const WeightTable& weights);
ImpactScore condition_impact(const ConditionBlock& cond, const WeightTable& weights);
ImpactScore exception_impact(const ExceptionBlock& block, const WeightTable& weights);
ImpactScore block_impact(const BlockNode& node, const WeightTable& weights);
ImpactScore sum_impacts(std::span<const BlockNode> nodes, const WeightTable& weights);

/// Computes, stores and returns the segment's impact.
ImpactScore segment_impact(CodeSegment& segment, const WeightTable& weights);

}  // namespace qmetric
