#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qmetric/error.hpp"
#include "qmetric/token.hpp"

namespace qmetric {

enum class StatementKind {
    Comment,
    HeaderInclude,
    Declaration,
    InitTermination,
    SimpleAssignment,
    ComplexAssignment,
    Expression,
    FunctionCall,
    Return,
};

inline constexpr std::size_t kStatementKindCount = 9;

inline constexpr StatementKind kAllStatementKinds[kStatementKindCount] = {
    StatementKind::Comment,           StatementKind::HeaderInclude,
    StatementKind::Declaration,       StatementKind::InitTermination,
    StatementKind::SimpleAssignment,  StatementKind::ComplexAssignment,
    StatementKind::Expression,        StatementKind::FunctionCall,
    StatementKind::Return,
};

std::string_view to_string(StatementKind kind);

enum class CountProvenance { LiteralBound, PragmaOverride, ConfigDefault };

std::string_view to_string(CountProvenance p);

struct IterationCount {
    std::uint64_t value = 1;
    CountProvenance provenance = CountProvenance::ConfigDefault;

    friend bool operator==(const IterationCount&, const IterationCount&) = default;
};

/// Inclusive 1-based line range.
struct LineSpan {
    std::size_t first = 0;
    std::size_t last = 0;

    bool contains(const LineSpan& other) const {
        return first <= other.first && other.last <= last;
    }
    bool overlaps(const LineSpan& other) const {
        return first <= other.last && other.first <= last;
    }
    friend bool operator==(const LineSpan&, const LineSpan&) = default;
};

struct BlockNode;
using NodeList = std::vector<BlockNode>;

struct StatementNode {
    StatementKind kind = StatementKind::Expression;
    std::vector<Token> tokens;
};

struct ConditionBlock {
    std::vector<NodeList> branches;
    bool is_switch = false;
};

enum class LoopKind { For, While, DoWhile };

struct LoopBlock {
    LoopKind loop = LoopKind::For;
    IterationCount count;
    NodeList body;
};

struct ExceptionBlock {
    std::size_t handlers = 1;
    NodeList body;
};

struct FunctionDef {
    std::string name;
    NodeList body;
};

struct BlockNode {
    std::variant<StatementNode, ConditionBlock, LoopBlock, ExceptionBlock, FunctionDef> kind;
    LineSpan span;

    template <class T> const T* as() const { return std::get_if<T>(&kind); }
    template <class T> T* as() { return std::get_if<T>(&kind); }
    bool is_statement() const { return as<StatementNode>() != nullptr; }
};

struct FrontendOptions {
    std::uint64_t default_iterations = 1;
    // Callee names classified as initiation/termination idioms.
    std::vector<std::string> init_term_names = {
        "open",   "close",  "fopen",   "fclose",  "freopen", "malloc", "calloc",
        "realloc", "free",  "exit",    "abort",   "init",    "shutdown", "socket",
        "connect", "bind",  "listen",  "accept",
    };
};

struct ParsedFile {
    NodeList nodes;
    std::vector<Diagnostic> diagnostics;
};

/// Builds the nested block tree. Raises Error{UnbalancedBraces} or
/// Error{MalformedHeader}; NegativeIterations comes through resolve_loop_count.
ParsedFile build_block_tree(std::span<const Token> tokens, const FrontendOptions& options = {});

StatementKind classify_statement(std::span<const Token> tokens, const FrontendOptions& options = {});

struct Pragma {
    std::int64_t iterations = 0;
    std::size_t line = 0;
};

/// Recognises a comment whose trimmed body is `@iters N`.
std::optional<std::int64_t> parse_pragma(std::string_view comment_text);

/// `header` is the token run between a loop's parentheses.
IterationCount resolve_loop_count(std::span<const Token> header, const std::optional<Pragma>& pragma,
                                  const FrontendOptions& options = {});

// Construction helpers, mostly for tests and synthetic trees.
BlockNode make_statement(StatementKind kind, LineSpan span);
BlockNode make_condition(std::vector<NodeList> branches, LineSpan span, bool is_switch = false);
BlockNode make_loop(IterationCount count, NodeList body, LineSpan span, LoopKind loop = LoopKind::For);
BlockNode make_exception(std::size_t handlers, NodeList body, LineSpan span);
BlockNode make_function(std::string name, NodeList body, LineSpan span);

}  // namespace qmetric
