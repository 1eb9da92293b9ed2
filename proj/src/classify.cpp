#include <algorithm>
#include <unordered_set>

#include "qmetric/block_tree.hpp"

namespace qmetric {

std::string_view to_string(StatementKind kind) {
    switch (kind) {
    case StatementKind::Comment: return "Comment";
    case StatementKind::HeaderInclude: return "HeaderInclude";
    case StatementKind::Declaration: return "Declaration";
    case StatementKind::InitTermination: return "InitTermination";
    case StatementKind::SimpleAssignment: return "SimpleAssignment";
    case StatementKind::ComplexAssignment: return "ComplexAssignment";
    case StatementKind::Expression: return "Expression";
    case StatementKind::FunctionCall: return "FunctionCall";
    case StatementKind::Return: return "Return";
    }
    return "Unknown";
}

namespace {

bool is_type_word(const Token& t) {
    static const std::unordered_set<std::string_view> words = {
        "auto",   "bool",     "char",      "class",    "const",   "constexpr", "double",
        "enum",   "explicit", "extern",    "float",    "inline",  "int",       "long",
        "mutable", "register", "short",    "signed",   "static",  "struct",    "template",
        "typedef", "typename", "union",    "unsigned", "using",   "virtual",   "void",
        "volatile",
    };
    return t.kind == TokenKind::Keyword && words.contains(t.text);
}

bool is_assignment_op(const Token& t) {
    static const std::unordered_set<std::string_view> ops = {
        "=", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<=", ">>=", "++", "--",
    };
    return t.kind == TokenKind::Punctuation && ops.contains(t.text);
}

bool is_counted_operator(const Token& t) {
    static const std::unordered_set<std::string_view> ops = {
        "+",  "-",  "*",  "/",  "%",  "<<", ">>", "<",  ">",   "<=",  ">=", "==",
        "!=", "&",  "|",  "^",  "&&", "||", "!",  "~",  "?",   "++",  "--", "<=>",
        "->*", ".*", "=", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<=", ">>=",
    };
    return t.kind == TokenKind::Punctuation && ops.contains(t.text);
}

bool is_literal_value(const Token& t) {
    if (t.kind == TokenKind::Literal)
        return true;
    return t.text == "NULL" || t.text == "nullptr" || t.text == "true" || t.text == "false";
}

struct Shape {
    std::vector<Token> sig;
    // Index of the first depth-0 assignment operator, or npos.
    std::size_t assign = std::string_view::npos;
    std::size_t calls = 0;
    std::size_t calls_after_assign = 0;
    std::vector<std::string_view> callees;
};

Shape analyse(std::span<const Token> tokens) {
    Shape s;
    for (const auto& t : tokens)
        if (t.kind != TokenKind::Comment)
            s.sig.push_back(t);
    while (!s.sig.empty() && s.sig.back().is_punct(";"))
        s.sig.pop_back();

    int depth = 0;
    for (std::size_t i = 0; i < s.sig.size(); ++i) {
        const Token& t = s.sig[i];
        if (t.is_punct("(") || t.is_punct("[") || t.is_punct("{"))
            ++depth;
        else if (t.is_punct(")") || t.is_punct("]") || t.is_punct("}"))
            depth = std::max(0, depth - 1);
        else if (depth == 0 && s.assign == std::string_view::npos && is_assignment_op(t))
            s.assign = i;

        if (t.kind == TokenKind::Identifier && i + 1 < s.sig.size() && s.sig[i + 1].is_punct("(")) {
            ++s.calls;
            if (s.assign != std::string_view::npos && i > s.assign)
                ++s.calls_after_assign;
            s.callees.push_back(t.text);
        }
    }
    return s;
}

// `Type [::Type]* [<...>] [*&]* name` followed by end, `=`, `[`, `,`, `(` or `:`.
bool has_declarator_shape(const std::vector<Token>& sig) {
    std::size_t i = 0;
    auto ident = [&](std::size_t k) { return k < sig.size() && sig[k].kind == TokenKind::Identifier; };
    if (!ident(0))
        return false;
    ++i;
    while (i + 1 < sig.size() && sig[i].is_punct("::") && ident(i + 1))
        i += 2;
    if (i < sig.size() && sig[i].is_punct("<")) {
        int depth = 0;
        for (; i < sig.size(); ++i) {
            const Token& t = sig[i];
            if (t.is_punct("<"))
                ++depth;
            else if (t.is_punct(">"))
                --depth;
            else if (t.is_punct(">>"))
                depth -= 2;
            else if (!(t.kind == TokenKind::Identifier || t.kind == TokenKind::Keyword ||
                       t.kind == TokenKind::Literal || t.is_punct("::") || t.is_punct(",") ||
                       t.is_punct("*") || t.is_punct("&")))
                return false;
            if (depth <= 0) {
                ++i;
                break;
            }
        }
        if (depth > 0)
            return false;
    }
    while (i < sig.size() && (sig[i].is_punct("*") || sig[i].is_punct("&") ||
                              sig[i].is_punct("&&") || sig[i].is_keyword("const")))
        ++i;
    if (!ident(i))
        return false;
    ++i;
    if (i == sig.size())
        return true;
    const Token& next = sig[i];
    return next.is_punct("=") || next.is_punct("[") || next.is_punct(",") || next.is_punct("(") ||
           next.is_punct(":") || next.is_punct("{");
}

bool rhs_is_literal(const Shape& s) {
    if (s.assign == std::string_view::npos || !s.sig[s.assign].is_punct("="))
        return false;
    std::size_t i = s.assign + 1;
    if (i < s.sig.size() && (s.sig[i].is_punct("-") || s.sig[i].is_punct("+")))
        ++i;
    return i + 1 == s.sig.size() && is_literal_value(s.sig[i]);
}

std::string_view directive_name(std::string_view text) {
    std::size_t i = 1;
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t'))
        ++i;
    std::size_t start = i;
    while (i < text.size() && ((text[i] >= 'a' && text[i] <= 'z') || text[i] == '_'))
        ++i;
    return text.substr(start, i - start);
}

}  // namespace

StatementKind classify_statement(std::span<const Token> tokens, const FrontendOptions& options) {
    Shape s = analyse(tokens);
    if (s.sig.empty()) {
        bool any_comment = std::any_of(tokens.begin(), tokens.end(),
                                       [](const Token& t) { return t.kind == TokenKind::Comment; });
        return any_comment ? StatementKind::Comment : StatementKind::Expression;
    }

    const Token& first = s.sig.front();
    if (first.kind == TokenKind::Preprocessor) {
        auto name = directive_name(first.text);
        if (name == "include" || name == "import" || name == "include_next")
            return StatementKind::HeaderInclude;
        return StatementKind::Declaration;
    }
    if (first.is_keyword("return"))
        return StatementKind::Return;

    bool declaration_start = is_type_word(first) || has_declarator_shape(s.sig);
    if (declaration_start) {
        // A call in the initializer demotes the line to an assignment kind.
        bool initializer_call = s.assign != std::string_view::npos && s.calls_after_assign > 0;
        if (!initializer_call)
            return StatementKind::Declaration;
    }

    if (first.is_keyword("break") || first.is_keyword("continue") || first.is_keyword("goto") ||
        first.is_keyword("delete"))
        return StatementKind::InitTermination;
    if (rhs_is_literal(s))
        return StatementKind::InitTermination;
    if (s.assign != std::string_view::npos && s.assign + 1 < s.sig.size() &&
        s.sig[s.assign + 1].is_keyword("new"))
        return StatementKind::InitTermination;
    for (auto callee : s.callees) {
        const auto& names = options.init_term_names;
        if (std::find(names.begin(), names.end(), callee) != names.end())
            return StatementKind::InitTermination;
    }

    if (s.calls > 0 && s.assign == std::string_view::npos)
        return StatementKind::FunctionCall;

    if (s.assign != std::string_view::npos) {
        std::size_t ops = 0;
        for (std::size_t i = 0; i < s.sig.size(); ++i)
            if (i != s.assign && is_counted_operator(s.sig[i]))
                ++ops;
        if (s.calls == 0 && ops <= 1)
            return StatementKind::SimpleAssignment;
        if ((s.calls == 0 && ops <= 3) || (s.calls == 1 && ops <= 1))
            return StatementKind::ComplexAssignment;
    }
    return StatementKind::Expression;
}

}  // namespace qmetric
