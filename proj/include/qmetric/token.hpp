#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace qmetric {

enum class TokenKind {
    Identifier,
    Keyword,
    Punctuation,
    Literal,
    Comment,
    Preprocessor,
};

std::string_view to_string(TokenKind kind);

struct Token {
    TokenKind kind = TokenKind::Punctuation;
    std::string text;
    std::size_t line = 1;
    // Whitespace between the previous token (or start of input) and this one.
    std::string leading;

    bool is(TokenKind k, std::string_view t) const { return kind == k && text == t; }
    bool is_punct(std::string_view t) const { return is(TokenKind::Punctuation, t); }
    bool is_keyword(std::string_view t) const { return is(TokenKind::Keyword, t); }
};

/// Output of tokenize(). Joining every token's `leading` and `text`, then
/// `trailing`, gives back the input byte-for-byte.
struct TokenStream {
    std::vector<Token> tokens;
    std::string trailing;
    std::size_t line_count = 0;
    std::size_t unknown_chars = 0;
};

}  // namespace qmetric
