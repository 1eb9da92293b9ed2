#pragma once

#include <string>
#include <string_view>

#include "qmetric/token.hpp"

namespace qmetric {

/// Lossless tokenizer for curly-brace C-like text. Block comments and
/// preprocessor lines are split into one token per physical line; characters
/// outside the grammar become single-character punctuation tokens and are
/// counted in `unknown_chars`.
TokenStream tokenize(std::string_view source);

std::string reconstruct(const TokenStream& stream);

bool is_keyword(std::string_view word);

/// Number of physical lines: a final line without a newline still counts.
std::size_t count_lines(std::string_view source);

}  // namespace qmetric
