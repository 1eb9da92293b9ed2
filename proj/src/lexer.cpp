#include "qmetric/lexer.hpp"

#include <array>
#include <unordered_set>

namespace qmetric {

std::string_view to_string(TokenKind kind) {
    switch (kind) {
    case TokenKind::Identifier: return "identifier";
    case TokenKind::Keyword: return "keyword";
    case TokenKind::Punctuation: return "punctuation";
    case TokenKind::Literal: return "literal";
    case TokenKind::Comment: return "comment";
    case TokenKind::Preprocessor: return "preprocessor";
    }
    return "unknown";
}

bool is_keyword(std::string_view word) {
    static const std::unordered_set<std::string_view> keywords = {
        "auto",     "bool",      "break",    "case",      "catch",    "char",
        "class",    "const",     "constexpr", "continue", "default",  "delete",
        "do",       "double",    "else",     "enum",      "explicit", "extern",
        "false",    "finally",   "float",    "for",       "goto",     "if",
        "inline",   "int",       "long",     "mutable",   "namespace", "new",
        "noexcept", "nullptr",   "operator", "private",   "protected", "public",
        "register", "return",    "short",    "signed",    "sizeof",   "static",
        "struct",   "switch",    "template", "this",      "throw",    "true",
        "try",      "typedef",   "typename", "union",     "unsigned", "using",
        "virtual",  "void",      "volatile", "while",     "__try",    "__except",
        "__finally",
    };
    return keywords.contains(word);
}

std::size_t count_lines(std::string_view source) {
    if (source.empty())
        return 0;
    std::size_t n = 0;
    for (char c : source)
        n += c == '\n';
    return source.back() == '\n' ? n : n + 1;
}

namespace {

bool is_ident_start(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}

bool is_ident_char(char c) {
    return is_ident_start(c) || (c >= '0' && c <= '9');
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }

bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

constexpr std::array<std::string_view, 31> kMultiPunct = {
    ">>=", "<<=", "...", "->*", "<=>", "::", "->", "++", "--", "<<", ">>",
    "<=",  ">=",  "==",  "!=",  "&&",  "||", "+=", "-=", "*=", "/=", "%=",
    "&=",  "|=",  "^=",  ".*",  "##",  "<:", ":>", "<%", "%>",
};

constexpr std::string_view kSinglePunct = "{}[]()<>;:,.?!~+-*/%&|^=#\\";

std::size_t utf8_length(unsigned char lead) {
    if (lead < 0x80) return 1;
    if ((lead >> 5) == 0x6) return 2;
    if ((lead >> 4) == 0xE) return 3;
    if ((lead >> 3) == 0x1E) return 4;
    return 1;
}

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    TokenStream run() {
        TokenStream out;
        out.line_count = count_lines(src_);
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (is_space(c)) {
                pending_ws_ += c;
                if (c == '\n') {
                    ++line_;
                    at_line_start_ = true;
                }
                ++pos_;
                continue;
            }
            if (c == '/' && peek(1) == '/') {
                emit(out, TokenKind::Comment, until_eol());
                continue;
            }
            if (c == '/' && peek(1) == '*') {
                block_comment(out);
                continue;
            }
            if (c == '#' && at_line_start_) {
                preprocessor(out);
                continue;
            }
            if (is_ident_start(c)) {
                std::size_t start = pos_;
                while (pos_ < src_.size() && is_ident_char(src_[pos_]))
                    ++pos_;
                std::string_view word = src_.substr(start, pos_ - start);
                emit(out, is_keyword(word) ? TokenKind::Keyword : TokenKind::Identifier, word);
                continue;
            }
            if (is_digit(c) || (c == '.' && is_digit(peek(1)))) {
                emit(out, TokenKind::Literal, number());
                continue;
            }
            if (c == '"' || c == '\'') {
                emit(out, TokenKind::Literal, quoted(c));
                continue;
            }
            if (auto p = punctuation(); !p.empty()) {
                pos_ += p.size();
                emit(out, TokenKind::Punctuation, p);
                continue;
            }
            std::size_t len = utf8_length(static_cast<unsigned char>(c));
            len = std::min(len, src_.size() - pos_);
            std::string_view unknown = src_.substr(pos_, len);
            pos_ += len;
            ++out.unknown_chars;
            emit(out, TokenKind::Punctuation, unknown);
        }
        out.trailing = std::move(pending_ws_);
        return out;
    }

private:
    char peek(std::size_t ahead) const {
        return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
    }

    void emit(TokenStream& out, TokenKind kind, std::string_view text) {
        out.tokens.push_back(Token{kind, std::string(text), line_, std::move(pending_ws_)});
        pending_ws_.clear();
        at_line_start_ = false;
    }

    std::string_view until_eol() {
        std::size_t start = pos_;
        while (pos_ < src_.size() && src_[pos_] != '\n')
            ++pos_;
        return src_.substr(start, pos_ - start);
    }

    // Splits the comment at newlines; leading indentation of continuation
    // lines goes into `leading`, so a blank interior line yields no token.
    void block_comment(TokenStream& out) {
        std::size_t piece_start = pos_;
        pos_ += 2;
        while (pos_ < src_.size()) {
            if (src_[pos_] == '*' && peek(1) == '/') {
                pos_ += 2;
                emit(out, TokenKind::Comment, src_.substr(piece_start, pos_ - piece_start));
                return;
            }
            if (src_[pos_] == '\n') {
                if (pos_ > piece_start)
                    emit(out, TokenKind::Comment, src_.substr(piece_start, pos_ - piece_start));
                pending_ws_ += '\n';
                ++line_;
                ++pos_;
                while (pos_ < src_.size() && (src_[pos_] == ' ' || src_[pos_] == '\t' ||
                                              src_[pos_] == '\r')) {
                    pending_ws_ += src_[pos_];
                    ++pos_;
                }
                piece_start = pos_;
                continue;
            }
            ++pos_;
        }
        if (pos_ > piece_start)
            emit(out, TokenKind::Comment, src_.substr(piece_start, pos_ - piece_start));
    }

    // One token per physical line, following backslash continuations.
    void preprocessor(TokenStream& out) {
        for (;;) {
            std::string_view text = until_eol();
            emit(out, TokenKind::Preprocessor, text);
            std::string_view trimmed = text;
            while (!trimmed.empty() && (trimmed.back() == ' ' || trimmed.back() == '\t' ||
                                        trimmed.back() == '\r'))
                trimmed.remove_suffix(1);
            if (trimmed.empty() || trimmed.back() != '\\' || pos_ >= src_.size())
                return;
            pending_ws_ += '\n';
            ++line_;
            ++pos_;
            while (pos_ < src_.size() && (src_[pos_] == ' ' || src_[pos_] == '\t')) {
                pending_ws_ += src_[pos_];
                ++pos_;
            }
            if (pos_ >= src_.size() || src_[pos_] == '\n')
                return;
        }
    }

    std::string_view number() {
        std::size_t start = pos_;
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if ((c == '+' || c == '-') && pos_ > start) {
                char prev = src_[pos_ - 1];
                if (prev == 'e' || prev == 'E' || prev == 'p' || prev == 'P') {
                    ++pos_;
                    continue;
                }
                break;
            }
            if (is_ident_char(c) || c == '.' || (c == '\'' && is_ident_char(peek(1)))) {
                ++pos_;
                continue;
            }
            break;
        }
        return src_.substr(start, pos_ - start);
    }

    std::string_view quoted(char quote) {
        std::size_t start = pos_;
        ++pos_;
        while (pos_ < src_.size() && src_[pos_] != '\n') {
            if (src_[pos_] == '\\' && pos_ + 1 < src_.size() && src_[pos_ + 1] != '\n') {
                pos_ += 2;
                continue;
            }
            if (src_[pos_] == quote) {
                ++pos_;
                break;
            }
            ++pos_;
        }
        return src_.substr(start, pos_ - start);
    }

    std::string_view punctuation() const {
        std::string_view rest = src_.substr(pos_);
        for (auto p : kMultiPunct)
            if (rest.starts_with(p))
                return rest.substr(0, p.size());
        if (kSinglePunct.find(rest.front()) != std::string_view::npos)
            return rest.substr(0, 1);
        return {};
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    bool at_line_start_ = true;
    std::string pending_ws_;
};

}  // namespace

TokenStream tokenize(std::string_view source) {
    return Lexer(source).run();
}

std::string reconstruct(const TokenStream& stream) {
    std::string out;
    for (const auto& t : stream.tokens) {
        out += t.leading;
        out += t.text;
    }
    out += stream.trailing;
    return out;
}

}  // namespace qmetric
