#include <algorithm>
#include <utility>

#include "qmetric/block_tree.hpp"

namespace qmetric {

BlockNode make_statement(StatementKind kind, LineSpan span) {
    return BlockNode{StatementNode{kind, {}}, span};
}

BlockNode make_condition(std::vector<NodeList> branches, LineSpan span, bool is_switch) {
    return BlockNode{ConditionBlock{std::move(branches), is_switch}, span};
}

BlockNode make_loop(IterationCount count, NodeList body, LineSpan span, LoopKind loop) {
    return BlockNode{LoopBlock{loop, count, std::move(body)}, span};
}

BlockNode make_exception(std::size_t handlers, NodeList body, LineSpan span) {
    return BlockNode{ExceptionBlock{handlers, std::move(body)}, span};
}

BlockNode make_function(std::string name, NodeList body, LineSpan span) {
    return BlockNode{FunctionDef{std::move(name), std::move(body)}, span};
}

namespace {

bool is_comment_head(const Token& t) {
    return t.text.starts_with("//") || t.text.starts_with("/*");
}

bool is_statement_starter_keyword(const Token& t) {
    static constexpr std::string_view words[] = {
        "if",     "for",    "while",  "do",     "switch", "return", "break",  "continue",
        "goto",   "try",    "throw",  "delete", "case",   "default", "int",   "char",
        "long",   "short",  "float",  "double", "void",   "unsigned", "signed", "bool",
        "auto",   "const",  "static", "struct", "enum",   "union",  "typedef", "extern",
        "register", "volatile", "using", "class", "namespace",
    };
    if (t.kind != TokenKind::Keyword)
        return false;
    return std::find(std::begin(words), std::end(words), t.text) != std::end(words);
}

bool ends_expression(const Token& t) {
    if (t.kind == TokenKind::Identifier || t.kind == TokenKind::Literal)
        return true;
    if (t.is_punct(")") || t.is_punct("]") || t.is_punct("++") || t.is_punct("--"))
        return true;
    return t.is_keyword("true") || t.is_keyword("false") || t.is_keyword("nullptr") ||
           t.is_keyword("this") || t.is_keyword("break") || t.is_keyword("continue") ||
           t.is_keyword("return");
}

// Only identifiers, type keywords and declarator punctuation so far: a
// multi-line type prefix such as `static int\nmain(void)`.
bool looks_like_type_prefix(const std::vector<Token>& toks) {
    return std::all_of(toks.begin(), toks.end(), [](const Token& t) {
        return t.kind == TokenKind::Identifier || t.kind == TokenKind::Keyword ||
               t.is_punct("*") || t.is_punct("&") || t.is_punct("::");
    });
}

class TreeBuilder {
public:
    TreeBuilder(std::span<const Token> tokens, const FrontendOptions& options)
        : toks_(tokens), options_(options) {}

    ParsedFile run() {
        ParsedFile out;
        out.nodes = parse_items(nullptr);
        flush_pragma();
        out.diagnostics = std::move(diagnostics_);
        return out;
    }

private:
    bool at_end() const { return pos_ >= toks_.size(); }
    const Token& cur() const { return toks_[pos_]; }

    const Token& take() {
        last_line_ = toks_[pos_].line;
        return toks_[pos_++];
    }

    bool first_on_line(std::size_t i) const {
        return i == 0 || toks_[i - 1].line != toks_[i].line;
    }

    std::size_t next_significant(std::size_t from) const {
        while (from < toks_.size() && toks_[from].kind == TokenKind::Comment)
            ++from;
        return from;
    }

    bool next_is_keyword(std::initializer_list<std::string_view> words) const {
        std::size_t i = next_significant(pos_);
        if (i >= toks_.size())
            return false;
        return std::any_of(words.begin(), words.end(),
                           [&](std::string_view w) { return toks_[i].is_keyword(w); });
    }

    // Drops comments up to the next significant token, keeping any pragma.
    void skip_comments() {
        while (!at_end() && cur().kind == TokenKind::Comment) {
            if (auto n = parse_pragma(cur().text))
                set_pragma(*n, cur().line);
            take();
        }
    }

    void set_pragma(std::int64_t n, std::size_t line) {
        flush_pragma();
        pending_ = Pragma{n, line};
    }

    void flush_pragma() {
        if (pending_)
            diagnostics_.push_back({pending_->line, "@iters pragma not followed by a loop; ignored"});
        pending_.reset();
    }

    [[noreturn]] void malformed(std::size_t line, const std::string& what) const {
        throw Error(ErrorCode::MalformedHeader, what, line);
    }

    NodeList parse_items(const Token* open_brace) {
        NodeList out;
        for (;;) {
            if (at_end()) {
                if (open_brace)
                    throw Error(ErrorCode::UnbalancedBraces, "unclosed '{'", open_brace->line);
                return out;
            }
            if (cur().is_punct("}")) {
                if (!open_brace)
                    throw Error(ErrorCode::UnbalancedBraces, "unmatched '}'", cur().line);
                take();
                return out;
            }
            parse_item(out);
        }
    }

    std::vector<Token> paren_group(std::size_t keyword_line, std::string_view what) {
        skip_comments();
        if (at_end() || !cur().is_punct("("))
            malformed(keyword_line, std::string(what) + " without '(' header");
        take();
        std::vector<Token> inner;
        int depth = 1;
        while (!at_end()) {
            const Token& t = take();
            if (t.is_punct("("))
                ++depth;
            else if (t.is_punct(")") && --depth == 0)
                return inner;
            if (t.kind != TokenKind::Comment)
                inner.push_back(t);
        }
        malformed(keyword_line, std::string(what) + " header is not closed");
    }

    NodeList parse_body(std::size_t keyword_line, std::string_view what) {
        skip_comments();
        if (at_end())
            malformed(keyword_line, std::string(what) + " without a body");
        if (cur().is_punct("{")) {
            const Token& open = take();
            return parse_items(&open);
        }
        if (cur().is_punct(";")) {
            take();
            return {};
        }
        if (cur().is_punct("}"))
            malformed(keyword_line, std::string(what) + " without a body");
        NodeList body;
        parse_item(body);
        return body;
    }

    void parse_item(NodeList& out) {
        const Token& t = cur();
        if (t.kind == TokenKind::Comment) {
            if (auto n = parse_pragma(t.text); n && is_comment_head(t)) {
                set_pragma(*n, t.line);
                take();
                return;
            }
            if (first_on_line(pos_)) {
                const Token& c = take();
                out.push_back(BlockNode{StatementNode{StatementKind::Comment, {c}}, {c.line, c.line}});
                return;
            }
            // Trailing comment: trivia, together with the rest of its block.
            take();
            while (!at_end() && cur().kind == TokenKind::Comment && !is_comment_head(cur()))
                take();
            return;
        }

        std::optional<Pragma> pragma = std::exchange(pending_, std::nullopt);
        bool is_loop = t.is_keyword("for") || t.is_keyword("while") || t.is_keyword("do");
        if (pragma && !is_loop) {
            pending_ = pragma;
            flush_pragma();
            pragma.reset();
        }

        if (t.is_punct(";")) {
            take();
            return;
        }
        if (t.is_punct("{")) {
            const Token& open = take();
            NodeList inner = parse_items(&open);
            std::move(inner.begin(), inner.end(), std::back_inserter(out));
            return;
        }
        if (t.kind == TokenKind::Keyword) {
            if (t.text == "if") return out.push_back(parse_if());
            if (t.text == "for") return out.push_back(parse_for(pragma));
            if (t.text == "while") return out.push_back(parse_while(pragma));
            if (t.text == "do") return out.push_back(parse_do(pragma));
            if (t.text == "switch") return out.push_back(parse_switch());
            if (t.text == "try" || t.text == "__try") return out.push_back(parse_try());
            if (t.text == "else") malformed(t.line, "'else' without a matching 'if'");
            if (t.text == "catch" || t.text == "__except" || t.text == "__finally" ||
                t.text == "finally")
                malformed(t.line, "'" + t.text + "' without a matching 'try'");
            if (t.text == "case" || t.text == "default") {
                skip_label();
                return;
            }
            if ((t.text == "public" || t.text == "private" || t.text == "protected") &&
                pos_ + 1 < toks_.size() && toks_[pos_ + 1].is_punct(":")) {
                take();
                take();
                return;
            }
        }
        if (t.kind == TokenKind::Identifier && pos_ + 1 < toks_.size() &&
            toks_[pos_ + 1].is_punct(":")) {
            take();
            take();
            return;
        }
        parse_statement(out);
    }

    void skip_label() {
        std::size_t line = cur().line;
        take();
        int depth = 0;
        while (!at_end()) {
            const Token& t = take();
            if (t.is_punct("(") || t.is_punct("["))
                ++depth;
            else if (t.is_punct(")") || t.is_punct("]"))
                --depth;
            else if (depth == 0 && t.is_punct(":"))
                return;
        }
        malformed(line, "case label without ':'");
    }

    BlockNode parse_if() {
        const Token& kw = take();
        std::size_t first = kw.line;
        if (!at_end() && cur().is_keyword("constexpr"))
            take();
        std::vector<NodeList> branches;
        paren_group(first, "if");
        branches.push_back(parse_body(first, "if"));
        while (next_is_keyword({"else"})) {
            skip_comments();
            std::size_t else_line = take().line;
            skip_comments();
            if (!at_end() && cur().is_keyword("if")) {
                take();
                paren_group(else_line, "else if");
                branches.push_back(parse_body(else_line, "else if"));
                continue;
            }
            branches.push_back(parse_body(else_line, "else"));
            break;
        }
        return make_condition(std::move(branches), {first, last_line_});
    }

    void note_default(const IterationCount& count, std::size_t line) {
        if (count.provenance == CountProvenance::ConfigDefault)
            diagnostics_.push_back({line, "loop bound not statically resolvable; using default " +
                                              std::to_string(count.value)});
    }

    BlockNode parse_for(const std::optional<Pragma>& pragma) {
        std::size_t first = take().line;
        auto header = paren_group(first, "for");
        IterationCount count = resolve_loop_count(header, pragma, options_);
        note_default(count, first);
        NodeList body = parse_body(first, "for");
        return make_loop(count, std::move(body), {first, last_line_}, LoopKind::For);
    }

    BlockNode parse_while(const std::optional<Pragma>& pragma) {
        std::size_t first = take().line;
        auto header = paren_group(first, "while");
        IterationCount count = resolve_loop_count(header, pragma, options_);
        note_default(count, first);
        NodeList body = parse_body(first, "while");
        return make_loop(count, std::move(body), {first, last_line_}, LoopKind::While);
    }

    BlockNode parse_do(const std::optional<Pragma>& pragma) {
        std::size_t first = take().line;
        NodeList body = parse_body(first, "do");
        skip_comments();
        if (at_end() || !cur().is_keyword("while"))
            malformed(first, "'do' without a trailing 'while'");
        std::size_t while_line = take().line;
        auto header = paren_group(while_line, "do-while");
        if (!at_end() && cur().is_punct(";"))
            take();
        IterationCount count = resolve_loop_count(header, pragma, options_);
        note_default(count, first);
        return make_loop(count, std::move(body), {first, last_line_}, LoopKind::DoWhile);
    }

    BlockNode parse_switch() {
        std::size_t first = take().line;
        paren_group(first, "switch");
        skip_comments();
        if (at_end() || !cur().is_punct("{"))
            malformed(first, "switch without a braced body");
        const Token& open = take();
        std::vector<NodeList> branches;
        NodeList current;
        for (;;) {
            if (at_end())
                throw Error(ErrorCode::UnbalancedBraces, "unclosed '{'", open.line);
            if (cur().is_punct("}")) {
                take();
                break;
            }
            if (cur().is_keyword("case") || cur().is_keyword("default")) {
                if (!current.empty())
                    branches.push_back(std::exchange(current, {}));
                skip_label();
                continue;
            }
            parse_item(current);
        }
        branches.push_back(std::move(current));
        return make_condition(std::move(branches), {first, last_line_}, true);
    }

    BlockNode parse_try() {
        std::size_t first = take().line;
        skip_comments();
        if (at_end() || !cur().is_punct("{"))
            malformed(first, "try without a braced body");
        NodeList body = parse_body(first, "try");
        std::size_t handlers = 0;
        while (next_is_keyword({"catch", "__except", "__finally", "finally"})) {
            skip_comments();
            const Token& kw = take();
            if (kw.text == "catch" || kw.text == "__except")
                paren_group(kw.line, kw.text);
            NodeList handler = parse_body(kw.line, kw.text);
            std::move(handler.begin(), handler.end(), std::back_inserter(body));
            ++handlers;
        }
        if (handlers == 0)
            malformed(first, "try without any handler");
        return make_exception(handlers, std::move(body), {first, last_line_});
    }

    void consume_braces(std::vector<Token>& into) {
        const Token& open = take();
        into.push_back(open);
        int depth = 1;
        while (!at_end()) {
            const Token& t = take();
            if (t.kind != TokenKind::Comment)
                into.push_back(t);
            if (t.is_punct("{"))
                ++depth;
            else if (t.is_punct("}") && --depth == 0)
                return;
        }
        throw Error(ErrorCode::UnbalancedBraces, "unclosed '{'", open.line);
    }

    // Name for a `{` that follows a function-like header, or nullopt.
    static std::optional<std::string> function_name(const std::vector<Token>& toks) {
        if (toks.empty())
            return std::nullopt;
        std::size_t end = toks.size();
        while (end > 0) {
            const Token& t = toks[end - 1];
            if (t.is_keyword("const") || t.is_keyword("noexcept") || t.is_keyword("volatile") ||
                t.is(TokenKind::Identifier, "override") || t.is(TokenKind::Identifier, "final") ||
                t.is_punct("&") || t.is_punct("&&"))
                --end;
            else
                break;
        }
        if (end == 0 || !toks[end - 1].is_punct(")"))
            return std::nullopt;
        std::size_t open = toks.size();
        int depth = 0;
        for (std::size_t i = 0; i < end; ++i) {
            const Token& t = toks[i];
            if (depth == 0 && (t.is_punct("=") || t.is_punct(";")))
                return std::nullopt;
            if (t.is_punct("(")) {
                if (depth == 0 && open == toks.size())
                    open = i;
                ++depth;
            } else if (t.is_punct(")")) {
                --depth;
            }
        }
        if (open == 0 || open == toks.size())
            return std::nullopt;
        const Token& callee = toks[open - 1];
        if (callee.kind != TokenKind::Identifier)
            return std::nullopt;
        std::string name = callee.text;
        std::size_t k = open - 1;
        while (k >= 2 && toks[k - 1].is_punct("::") && toks[k - 2].kind == TokenKind::Identifier) {
            name = toks[k - 2].text + "::" + name;
            k -= 2;
        }
        return name;
    }

    struct Container {
        std::string name;
        bool record = false;  // class/struct/union: drop trailing declarators
    };

    static std::optional<Container> container_of(const std::vector<Token>& toks) {
        if (toks.empty())
            return std::nullopt;
        for (const auto& t : toks)
            if (t.is_punct("=") || t.is_keyword("typedef") || t.is_keyword("enum"))
                return std::nullopt;
        if (toks[0].is_keyword("namespace"))
            return Container{toks.size() > 1 ? toks[1].text : "(anonymous)", false};
        if (toks[0].is_keyword("extern") && toks.size() == 2 && toks[1].kind == TokenKind::Literal)
            return Container{"extern " + toks[1].text, false};
        for (std::size_t i = 0; i < toks.size(); ++i) {
            if (toks[i].is_keyword("class") || toks[i].is_keyword("struct") ||
                toks[i].is_keyword("union")) {
                std::string name = i + 1 < toks.size() && toks[i + 1].kind == TokenKind::Identifier
                                       ? toks[i + 1].text
                                       : "(anonymous)";
                return Container{name, true};
            }
        }
        return std::nullopt;
    }

    bool newline_terminates(const std::vector<Token>& toks, const Token& next) const {
        if (toks.empty() || next.line <= toks.back().line)
            return false;
        if (!ends_expression(toks.back()) || looks_like_type_prefix(toks))
            return false;
        return next.kind == TokenKind::Identifier || is_statement_starter_keyword(next);
    }

    void parse_statement(NodeList& out) {
        std::vector<Token> toks;
        std::size_t first = cur().line;
        int depth = 0;
        if (cur().kind == TokenKind::Preprocessor) {
            const Token& p = take();
            toks.push_back(p);
            out.push_back(BlockNode{StatementNode{classify_statement(toks, options_), toks},
                                    {first, p.line}});
            return;
        }
        while (!at_end()) {
            const Token& t = cur();
            if (t.kind == TokenKind::Comment || t.kind == TokenKind::Preprocessor) {
                take();
                continue;
            }
            if (depth == 0 && newline_terminates(toks, t))
                break;
            if (depth == 0 && t.is_punct(";")) {
                toks.push_back(take());
                break;
            }
            if (depth == 0 && t.is_punct("}"))
                break;
            if (t.is_punct("{")) {
                if (depth == 0) {
                    if (auto name = function_name(toks)) {
                        const Token& open = take();
                        NodeList body = parse_items(&open);
                        out.push_back(make_function(*name, std::move(body), {first, last_line_}));
                        return;
                    }
                    if (auto c = container_of(toks)) {
                        const Token& open = take();
                        NodeList body = parse_items(&open);
                        if (c->record)
                            drop_declarators();
                        out.push_back(make_function(c->name, std::move(body), {first, last_line_}));
                        return;
                    }
                }
                consume_braces(toks);
                continue;
            }
            if (t.is_punct("(") || t.is_punct("["))
                ++depth;
            else if ((t.is_punct(")") || t.is_punct("]")) && depth > 0)
                --depth;
            toks.push_back(take());
        }
        if (toks.empty())
            return;
        StatementKind kind = classify_statement(toks, options_);
        out.push_back(BlockNode{StatementNode{kind, std::move(toks)}, {first, last_line_}});
    }

    // `struct S { ... } a, b;` keeps only the body.
    void drop_declarators() {
        while (!at_end()) {
            if (cur().is_punct("}") || cur().is_punct("{"))
                return;
            if (cur().is_punct(";")) {
                take();
                return;
            }
            if (cur().kind == TokenKind::Comment || first_on_line(pos_))
                return;
            take();
        }
    }

    std::span<const Token> toks_;
    const FrontendOptions& options_;
    std::size_t pos_ = 0;
    std::size_t last_line_ = 0;
    std::optional<Pragma> pending_;
    std::vector<Diagnostic> diagnostics_;
};

}  // namespace

ParsedFile build_block_tree(std::span<const Token> tokens, const FrontendOptions& options) {
    return TreeBuilder(tokens, options).run();
}

}  // namespace qmetric
