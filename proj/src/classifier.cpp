#include "qmetric/classifier.hpp"

#include <map>
#include <string>

namespace qmetric {

std::string_view to_string(RubricQuestion q) {
    switch (q) {
    case RubricQuestion::SegmentFlow: return "segment_flow";
    case RubricQuestion::ObjectReuse: return "object_reuse";
    case RubricQuestion::Commenting: return "commenting";
    case RubricQuestion::ErrorControls: return "error_controls";
    case RubricQuestion::SecurityCustomization: return "security_customization";
    }
    return "?";
}

namespace {

bool is_exit(const BlockNode& node, bool inside_switch) {
    const auto* st = node.as<StatementNode>();
    if (!st)
        return false;
    for (const auto& t : st->tokens) {
        if (t.kind == TokenKind::Comment)
            continue;
        if (t.is_keyword("continue"))
            return true;
        return t.is_keyword("break") && !inside_switch;
    }
    return false;
}

// Exits that leave the innermost enclosing loop.
std::size_t loop_exits(const NodeList& nodes, bool inside_switch) {
    std::size_t n = 0;
    for (const auto& node : nodes) {
        if (is_exit(node, inside_switch)) {
            ++n;
        } else if (const auto* c = node.as<ConditionBlock>()) {
            for (const auto& b : c->branches)
                n += loop_exits(b, inside_switch || c->is_switch);
        } else if (const auto* e = node.as<ExceptionBlock>()) {
            n += loop_exits(e->body, inside_switch);
        }
    }
    return n;
}

std::size_t excess_exits(const NodeList& nodes) {
    std::size_t n = 0;
    for (const auto& node : nodes) {
        if (const auto* l = node.as<LoopBlock>()) {
            std::size_t k = loop_exits(l->body, false);
            n += k > 1 ? k - 1 : 0;
            n += excess_exits(l->body);
        } else if (const auto* c = node.as<ConditionBlock>()) {
            for (const auto& b : c->branches)
                n += excess_exits(b);
        } else if (const auto* e = node.as<ExceptionBlock>()) {
            n += excess_exits(e->body);
        } else if (const auto* f = node.as<FunctionDef>()) {
            n += excess_exits(f->body);
        }
    }
    return n;
}

bool opens_statement(const Token& t) {
    return t.is_punct(";") || t.is_punct("{") || t.is_punct("}") || t.is_punct(":");
}

}  // namespace

FlowReport flow_orderliness(const NodeList& tree, std::span<const Token> tokens, std::size_t exit_limit) {
    std::vector<const Token*> sig;
    for (const auto& t : tokens)
        if (t.kind != TokenKind::Comment && t.kind != TokenKind::Preprocessor)
            sig.push_back(&t);

    std::map<std::string, std::size_t> labels;
    for (std::size_t i = 0; i + 1 < sig.size(); ++i) {
        const Token& t = *sig[i];
        if (t.kind != TokenKind::Identifier || !sig[i + 1]->is_punct(":"))
            continue;
        bool at_start = i == 0 || opens_statement(*sig[i - 1]) || sig[i - 1]->line < t.line;
        if (at_start && !(i > 0 && sig[i - 1]->is_keyword("case")))
            labels.emplace(t.text, i);
    }

    FlowReport r;
    for (std::size_t i = 0; i + 1 < sig.size(); ++i) {
        if (!sig[i]->is_keyword("goto") || sig[i + 1]->kind != TokenKind::Identifier)
            continue;
        auto it = labels.find(sig[i + 1]->text);
        if (it != labels.end() && it->second < i)
            ++r.backward_jumps;
        else
            ++r.unstructured_exits;
    }
    r.unstructured_exits += excess_exits(tree);
    r.orderly = r.backward_jumps == 0 && r.unstructured_exits <= exit_limit;
    return r;
}

FlowReport merge_flow(std::span<const FlowReport> parts, std::size_t exit_limit) {
    FlowReport r;
    for (const auto& p : parts) {
        r.backward_jumps += p.backward_jumps;
        r.unstructured_exits += p.unstructured_exits;
    }
    r.orderly = r.backward_jumps == 0 && r.unstructured_exits <= exit_limit;
    return r;
}

Rational rubric_score(const LevelRubric& rubric, const FlowReport& flow, const Rational& penalty) {
    Rational score = 0;
    for (auto q : kRubricQuestions) {
        const auto& a = rubric[q];
        if (!a)
            throw Error(ErrorCode::IncompleteRubric, "no answer for " + std::string(to_string(q)));
        if (*a < 0 || *a > 2)
            throw Error(ErrorCode::AttributeOutOfRange,
                        std::string(to_string(q)) + " = " + std::to_string(*a) + " (expected 0, 1 or 2)");
        score += *a;
    }
    if (!flow.orderly)
        score -= penalty;
    if (score < 0)
        score = 0;
    if (score > 10)
        score = 10;
    return score;
}

QualityLevel classify_level(const Rational& score) {
    if (score < 0 || score > 10)
        throw Error(ErrorCode::ScoreOutOfRange, "score " + score.str() + " outside [0, 10]");
    const Rational r85(17, 2), r65(13, 2), r45(9, 2);
    QualityLevel q;
    if (score >= r85) {
        q = {1, r85, 10, true, true};
    } else if (score >= r65) {
        q = {2, r65, r85, false, score <= 8};
    } else if (score >= r45) {
        q = {3, r45, r65, false, score <= 6};
    } else {
        q = {4, 0, r45, false, true};  // "and below"
    }
    return q;
}

}  // namespace qmetric
