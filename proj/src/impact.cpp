#include "qmetric/impact.hpp"

namespace qmetric {

WeightTable::WeightTable() {
    auto put = [this](StatementKind k, Rational w) { weights_[static_cast<std::size_t>(k)] = w; };
    put(StatementKind::Comment, Rational(1, 2));
    put(StatementKind::HeaderInclude, Rational(7, 10));
    put(StatementKind::Declaration, Rational(1, 10));
    put(StatementKind::InitTermination, Rational(2, 10));
    put(StatementKind::SimpleAssignment, Rational(3, 10));
    put(StatementKind::ComplexAssignment, Rational(5, 10));
    put(StatementKind::Expression, Rational(8, 10));
    put(StatementKind::FunctionCall, Rational(8, 10));
    put(StatementKind::Return, Rational(8, 10));
}

void WeightTable::set(StatementKind kind, const Rational& weight) {
    if (weight < 0 || weight > 1)
        throw Error(ErrorCode::InvalidWeight,
                    std::string(to_string(kind)) + " weight " + weight.str() + " outside [0, 1]");
    weights_[static_cast<std::size_t>(kind)] = weight;
}

ImpactScore statement_impact(StatementKind kind, const WeightTable& weights) {
    return weights[kind];
}

ImpactScore simple_run_impact(std::span<const BlockNode> run, const WeightTable& weights) {
    return sum_impacts(run, weights);
}

ImpactScore sum_impacts(std::span<const BlockNode> nodes, const WeightTable& weights) {
    ImpactScore total = 0;
    for (const auto& n : nodes)
        total += block_impact(n, weights);
    return total;
}

ImpactScore loop_impact(const LoopBlock& loop, const WeightTable& weights) {
    return Rational(BigInt(loop.count.value)) * sum_impacts(loop.body, weights);
}

ImpactScore condition_impact(const ConditionBlock& cond, const WeightTable& weights) {
    if (cond.branches.empty())
        return 0;
    ImpactScore inner = 0;
    for (const auto& branch : cond.branches)
        inner += sum_impacts(branch, weights);
    return inner / Rational(BigInt(cond.branches.size()));
}

ImpactScore exception_impact(const ExceptionBlock& block, const WeightTable& weights) {
    ImpactScore body = sum_impacts(block.body, weights);
    if (!weights.exception_multiplier_enabled)
        return body;
    return body * Rational(BigInt(block.handlers));
}

ImpactScore block_impact(const BlockNode& node, const WeightTable& weights) {
    struct Visitor {
        const WeightTable& w;
        ImpactScore operator()(const StatementNode& s) const { return statement_impact(s.kind, w); }
        ImpactScore operator()(const LoopBlock& l) const { return loop_impact(l, w); }
        ImpactScore operator()(const ConditionBlock& c) const { return condition_impact(c, w); }
        ImpactScore operator()(const ExceptionBlock& e) const { return exception_impact(e, w); }
        ImpactScore operator()(const FunctionDef& f) const { return sum_impacts(f.body, w); }
    };
    return std::visit(Visitor{weights}, node.kind);
}

ImpactScore segment_impact(CodeSegment& segment, const WeightTable& weights) {
    segment.impact = sum_impacts(segment.nodes, weights);
    return segment.impact;
}

}  // namespace qmetric
