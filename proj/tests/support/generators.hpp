#pragma once

// Hand-rolled generators for property tests: random C-like sources with
// known-good syntax, random block trees, and an independent evaluator that
// multiplies path factors down to each leaf instead of folding bottom-up.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qmetric/block_tree.hpp"
#include "qmetric/impact.hpp"

namespace qtest {

using Rng = std::mt19937_64;

inline std::size_t pick(Rng& rng, std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

// --- sources ---------------------------------------------------------------

inline std::string gen_simple_line(Rng& rng) {
    static const char* lines[] = {
        "int v;",
        "unsigned long total;",
        "/* note */",
        "// trailing remark",
        "x = y;",
        "x = 7;",
        "x = y + z * w;",
        "n = compute(a);",
        "log_event(a, b);",
        "return(x);",
        "a + b * c - d / e;",
        "break;",
        "#include <stdio.h>",
    };
    return lines[pick(rng, std::size(lines))];
}

inline void gen_block(Rng& rng, int depth, const std::string& indent, std::string& out);

inline void gen_statement(Rng& rng, int depth, const std::string& indent, std::string& out) {
    std::size_t choice = depth <= 0 ? 0 : pick(rng, 9);
    std::string in = indent + "\t";
    switch (choice) {
    case 5: {
        out += indent + "for (i = 0; i < " + std::to_string(1 + pick(rng, 5)) + "; i++)\n" + indent + "{\n";
        gen_block(rng, depth - 1, in, out);
        out += indent + "}\n";
        break;
    }
    case 6: {
        out += indent + "if (a > b)\n" + indent + "{\n";
        gen_block(rng, depth - 1, in, out);
        out += indent + "}\n";
        std::size_t extra = pick(rng, 3);
        for (std::size_t i = 0; i < extra; ++i) {
            out += indent + (i + 1 == extra && pick(rng, 2) ? "else\n" : "else if (c)\n") + indent + "{\n";
            gen_block(rng, depth - 1, in, out);
            out += indent + "}\n";
        }
        break;
    }
    case 7: {
        out += indent + "while (running)\n" + indent + "{\n";
        gen_block(rng, depth - 1, in, out);
        out += indent + "}\n";
        break;
    }
    case 8: {
        out += indent + "try\n" + indent + "{\n";
        gen_block(rng, depth - 1, in, out);
        out += indent + "}\n";
        std::size_t handlers = 1 + pick(rng, 2);
        for (std::size_t i = 0; i < handlers; ++i) {
            out += indent + "catch (...)\n" + indent + "{\n";
            gen_block(rng, depth - 1, in, out);
            out += indent + "}\n";
        }
        break;
    }
    default: out += indent + gen_simple_line(rng) + "\n";
    }
}

inline void gen_block(Rng& rng, int depth, const std::string& indent, std::string& out) {
    std::size_t n = 1 + pick(rng, 4);
    for (std::size_t i = 0; i < n; ++i)
        gen_statement(rng, depth, indent, out);
}

/// File-scope statements only (no function definitions), as separate lines.
inline std::vector<std::string> gen_source_lines(Rng& rng, int depth = 3) {
    std::vector<std::string> stmts;
    std::size_t n = 1 + pick(rng, 6);
    for (std::size_t i = 0; i < n; ++i) {
        std::string s;
        gen_statement(rng, depth, "", s);
        stmts.push_back(std::move(s));
    }
    return stmts;
}

inline std::string join(const std::vector<std::string>& parts) {
    std::string out;
    for (const auto& p : parts) out += p;
    return out;
}

/// Optionally wraps the statements in a function definition.
inline std::string gen_source(Rng& rng) {
    std::string body = join(gen_source_lines(rng));
    if (pick(rng, 2))
        return "int fn" + std::to_string(pick(rng, 100)) + "(void)\n{\n" + body + "}\n";
    return body;
}

// --- trees -----------------------------------------------------------------

inline qmetric::NodeList gen_tree(Rng& rng, int depth, std::size_t& line);

inline qmetric::BlockNode gen_node(Rng& rng, int depth, std::size_t& line) {
    using namespace qmetric;
    std::size_t first = line++;
    std::size_t choice = depth <= 0 ? 0 : pick(rng, 8);
    auto close = [&] { return LineSpan{first, line++}; };
    switch (choice) {
    case 4: {
        auto body = gen_tree(rng, depth - 1, line);
        IterationCount c{static_cast<std::uint64_t>(pick(rng, 12)), CountProvenance::LiteralBound};
        return make_loop(c, std::move(body), close());
    }
    case 5: {
        std::vector<NodeList> branches;
        std::size_t h = 1 + pick(rng, 4);
        for (std::size_t i = 0; i < h; ++i) branches.push_back(gen_tree(rng, depth - 1, line));
        return make_condition(std::move(branches), close(), pick(rng, 2) == 0);
    }
    case 6: {
        auto body = gen_tree(rng, depth - 1, line);
        return make_exception(1 + pick(rng, 3), std::move(body), close());
    }
    case 7: {
        auto body = gen_tree(rng, depth - 1, line);
        return make_function("f" + std::to_string(first), std::move(body), close());
    }
    default:
        return make_statement(kAllStatementKinds[pick(rng, kStatementKindCount)], {first, first});
    }
}

inline qmetric::NodeList gen_tree(Rng& rng, int depth, std::size_t& line) {
    qmetric::NodeList out;
    std::size_t n = pick(rng, 4);
    for (std::size_t i = 0; i < n; ++i) out.push_back(gen_node(rng, depth, line));
    return out;
}

/// Random weights on a 1/20 grid, including 0 and 1.
inline qmetric::WeightTable gen_weights(Rng& rng) {
    qmetric::WeightTable w;
    for (auto k : qmetric::kAllStatementKinds)
        w.set(k, qmetric::Rational(static_cast<long>(pick(rng, 21)), 20));
    w.exception_multiplier_enabled = pick(rng, 2) == 0;
    return w;
}

// --- reference evaluator ---------------------------------------------------

/// Adds weight(leaf) * product of enclosing factors for every leaf.
inline void path_product(const qmetric::NodeList& nodes, const qmetric::Rational& factor,
                         const qmetric::WeightTable& w, qmetric::Rational& acc) {
    using namespace qmetric;
    for (const auto& n : nodes) {
        if (auto s = n.as<StatementNode>()) {
            acc += factor * w[s->kind];
        } else if (auto l = n.as<LoopBlock>()) {
            path_product(l->body, factor * Rational(l->count.value), w, acc);
        } else if (auto c = n.as<ConditionBlock>()) {
            if (c->branches.empty()) continue;
            Rational f = factor / Rational(static_cast<long>(c->branches.size()));
            for (const auto& b : c->branches) path_product(b, f, w, acc);
        } else if (auto e = n.as<ExceptionBlock>()) {
            Rational m = w.exception_multiplier_enabled ? Rational(static_cast<long>(e->handlers)) : Rational(1);
            path_product(e->body, factor * m, w, acc);
        } else if (auto f = n.as<FunctionDef>()) {
            path_product(f->body, factor, w, acc);
        }
    }
}

inline qmetric::Rational reference_impact(const qmetric::NodeList& nodes, const qmetric::WeightTable& w) {
    qmetric::Rational acc = 0;
    path_product(nodes, 1, w, acc);
    return acc;
}

}  // namespace qtest
