#include <charconv>
#include <limits>

#include "qmetric/block_tree.hpp"

namespace qmetric {

std::string_view to_string(CountProvenance p) {
    switch (p) {
    case CountProvenance::LiteralBound: return "LiteralBound";
    case CountProvenance::PragmaOverride: return "PragmaOverride";
    case CountProvenance::ConfigDefault: return "ConfigDefault";
    }
    return "Unknown";
}

namespace {

// Wide enough that init/bound pairs from int64 literals never overflow.
__extension__ typedef __int128 Wide;

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

std::optional<std::int64_t> parse_integer(std::string_view text) {
    while (!text.empty() && (text.back() == 'u' || text.back() == 'U' || text.back() == 'l' ||
                             text.back() == 'L'))
        text.remove_suffix(1);
    int base = 10;
    if (text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
        base = 16;
        text.remove_prefix(2);
    } else if (text.size() > 1 && text[0] == '0') {
        base = 8;
        text.remove_prefix(1);
    }
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value, base);
    if (ec != std::errc() || ptr != text.data() + text.size())
        return std::nullopt;
    return value;
}

// [-]INT starting at `i`; advances `i` past it.
std::optional<std::int64_t> signed_literal(std::span<const Token> toks, std::size_t& i) {
    bool negative = false;
    if (i < toks.size() && toks[i].is_punct("-")) {
        negative = true;
        ++i;
    }
    if (i >= toks.size() || toks[i].kind != TokenKind::Literal)
        return std::nullopt;
    auto v = parse_integer(toks[i].text);
    if (!v)
        return std::nullopt;
    ++i;
    return negative ? -*v : *v;
}

struct Init {
    std::string_view var;
    std::int64_t start;
};

std::optional<Init> match_init(std::span<const Token> toks) {
    // Optional type words, then `var = [-]INT`.
    std::size_t eq = 0;
    while (eq < toks.size() && !toks[eq].is_punct("="))
        ++eq;
    if (eq == 0 || eq >= toks.size() || toks[eq - 1].kind != TokenKind::Identifier)
        return std::nullopt;
    for (std::size_t k = 0; k + 1 < eq; ++k)
        if (toks[k].kind != TokenKind::Keyword && toks[k].kind != TokenKind::Identifier)
            return std::nullopt;
    std::size_t i = eq + 1;
    auto v = signed_literal(toks, i);
    if (!v || i != toks.size())
        return std::nullopt;
    return Init{toks[eq - 1].text, *v};
}

enum class Cmp { Less, LessEq, Greater, GreaterEq, NotEq };

struct Cond {
    Cmp cmp;
    std::int64_t bound;
};

std::optional<Cmp> comparison(const Token& t) {
    if (t.is_punct("<")) return Cmp::Less;
    if (t.is_punct("<=")) return Cmp::LessEq;
    if (t.is_punct(">")) return Cmp::Greater;
    if (t.is_punct(">=")) return Cmp::GreaterEq;
    if (t.is_punct("!=")) return Cmp::NotEq;
    return std::nullopt;
}

Cmp mirrored(Cmp c) {
    switch (c) {
    case Cmp::Less: return Cmp::Greater;
    case Cmp::LessEq: return Cmp::GreaterEq;
    case Cmp::Greater: return Cmp::Less;
    case Cmp::GreaterEq: return Cmp::LessEq;
    case Cmp::NotEq: return Cmp::NotEq;
    }
    return c;
}

std::optional<Cond> match_cond(std::span<const Token> toks, std::string_view var) {
    if (toks.size() >= 3 && toks[0].kind == TokenKind::Identifier && toks[0].text == var) {
        auto cmp = comparison(toks[1]);
        std::size_t i = 2;
        auto v = signed_literal(toks, i);
        if (cmp && v && i == toks.size())
            return Cond{*cmp, *v};
        return std::nullopt;
    }
    std::size_t i = 0;
    auto v = signed_literal(toks, i);
    if (!v || i + 2 != toks.size())
        return std::nullopt;
    auto cmp = comparison(toks[i]);
    if (!cmp || toks[i + 1].kind != TokenKind::Identifier || toks[i + 1].text != var)
        return std::nullopt;
    return Cond{mirrored(*cmp), *v};
}

// +1 for unit increment, -1 for unit decrement, 0 otherwise.
int match_step(std::span<const Token> toks, std::string_view var) {
    auto is_var = [&](std::size_t k) {
        return k < toks.size() && toks[k].kind == TokenKind::Identifier && toks[k].text == var;
    };
    auto is_one = [&](std::size_t k) {
        if (k >= toks.size() || toks[k].kind != TokenKind::Literal)
            return false;
        auto v = parse_integer(toks[k].text);
        return v && *v == 1;
    };
    if (toks.size() == 2) {
        if (is_var(0) && toks[1].is_punct("++")) return 1;
        if (is_var(0) && toks[1].is_punct("--")) return -1;
        if (toks[0].is_punct("++") && is_var(1)) return 1;
        if (toks[0].is_punct("--") && is_var(1)) return -1;
    }
    if (toks.size() == 3 && is_var(0) && is_one(2)) {
        if (toks[1].is_punct("+=")) return 1;
        if (toks[1].is_punct("-=")) return -1;
    }
    if (toks.size() == 5 && is_var(0) && toks[1].is_punct("=") && is_var(2) && is_one(4)) {
        if (toks[3].is_punct("+")) return 1;
        if (toks[3].is_punct("-")) return -1;
    }
    return 0;
}

}  // namespace

std::optional<std::int64_t> parse_pragma(std::string_view text) {
    text = trim(text);
    if (text.starts_with("//")) {
        text.remove_prefix(2);
    } else if (text.starts_with("/*") && text.ends_with("*/") && text.size() >= 4) {
        text.remove_prefix(2);
        text.remove_suffix(2);
    } else {
        return std::nullopt;
    }
    text = trim(text);
    constexpr std::string_view kTag = "@iters";
    if (!text.starts_with(kTag))
        return std::nullopt;
    text.remove_prefix(kTag.size());
    if (text.empty() || (text.front() != ' ' && text.front() != '\t'))
        return std::nullopt;
    text = trim(text);
    std::size_t start = text.starts_with("-") || text.starts_with("+") ? 1 : 0;
    if (start == text.size())
        return std::nullopt;
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + start, text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size())
        return std::nullopt;
    return text.front() == '-' ? -value : value;
}

IterationCount resolve_loop_count(std::span<const Token> header, const std::optional<Pragma>& pragma,
                                  const FrontendOptions& options) {
    if (pragma) {
        if (pragma->iterations < 0)
            throw Error(ErrorCode::NegativeIterations,
                        "@iters " + std::to_string(pragma->iterations), pragma->line);
        return {static_cast<std::uint64_t>(pragma->iterations), CountProvenance::PragmaOverride};
    }

    const IterationCount fallback{options.default_iterations, CountProvenance::ConfigDefault};

    std::vector<Token> sig;
    for (const auto& t : header)
        if (t.kind != TokenKind::Comment)
            sig.push_back(t);
    std::vector<std::span<const Token>> parts;
    std::size_t begin = 0;
    int depth = 0;
    for (std::size_t i = 0; i < sig.size(); ++i) {
        if (sig[i].is_punct("("))
            ++depth;
        else if (sig[i].is_punct(")"))
            --depth;
        else if (depth == 0 && sig[i].is_punct(";")) {
            parts.emplace_back(sig.data() + begin, i - begin);
            begin = i + 1;
        }
    }
    parts.emplace_back(sig.data() + begin, sig.size() - begin);
    if (parts.size() != 3)
        return fallback;

    auto init = match_init(parts[0]);
    if (!init)
        return fallback;
    auto cond = match_cond(parts[1], init->var);
    if (!cond)
        return fallback;
    int step = match_step(parts[2], init->var);
    if (step == 0)
        return fallback;

    Wide start = init->start;
    Wide bound = cond->bound;
    Wide count = 0;
    if (step > 0) {
        switch (cond->cmp) {
        case Cmp::Less: count = bound - start; break;
        case Cmp::LessEq: count = bound - start + 1; break;
        case Cmp::NotEq:
            if (bound < start)
                return fallback;
            count = bound - start;
            break;
        default: return fallback;
        }
    } else {
        switch (cond->cmp) {
        case Cmp::Greater: count = start - bound; break;
        case Cmp::GreaterEq: count = start - bound + 1; break;
        case Cmp::NotEq:
            if (bound > start)
                return fallback;
            count = start - bound;
            break;
        default: return fallback;
        }
    }
    std::size_t line = header.empty() ? 0 : header.front().line;
    if (count < 0)
        throw Error(ErrorCode::NegativeIterations,
                    "loop bound yields " + std::to_string(static_cast<long long>(count)) + " iterations",
                    line);
    if (count > static_cast<Wide>(std::numeric_limits<std::uint64_t>::max()))
        return fallback;
    return {static_cast<std::uint64_t>(count), CountProvenance::LiteralBound};
}

}  // namespace qmetric
