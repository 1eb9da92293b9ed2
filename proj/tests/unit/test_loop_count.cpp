#include <doctest.h>

#include "qmetric/error.hpp"
#include "qmetric/lexer.hpp"
#include "test_support.hpp"

using namespace qmetric;

static IterationCount count(std::string_view header, std::optional<Pragma> p = std::nullopt,
                            const FrontendOptions& opts = {}) {
    auto ts = tokenize(header);
    return resolve_loop_count(ts.tokens, p, opts);
}

TEST_CASE("literal bounds") {
    CHECK(count("i=0;i<100;i++") == IterationCount{100, CountProvenance::LiteralBound});
    CHECK(count("int i = 0; i <= 9; ++i") == IterationCount{10, CountProvenance::LiteralBound});
    CHECK(count("i = 10; i > 0; i--") == IterationCount{10, CountProvenance::LiteralBound});
    CHECK(count("i = 10; i >= 1; --i") == IterationCount{10, CountProvenance::LiteralBound});
    CHECK(count("i = 0; i != 4; i += 1") == IterationCount{4, CountProvenance::LiteralBound});
    CHECK(count("i = 3; i < 3; i++") == IterationCount{0, CountProvenance::LiteralBound});
}

TEST_CASE("unresolvable bounds fall back to the default") {
    CHECK(count("i = 0; i < n; i++") == IterationCount{1, CountProvenance::ConfigDefault});
    CHECK(count("i = 0; i < 10; i += 2") == IterationCount{1, CountProvenance::ConfigDefault});
    CHECK(count("running") == IterationCount{1, CountProvenance::ConfigDefault});
    CHECK(count(";;") == IterationCount{1, CountProvenance::ConfigDefault});
    FrontendOptions opts;
    opts.default_iterations = 7;
    CHECK(count("x", std::nullopt, opts) == IterationCount{7, CountProvenance::ConfigDefault});
}

TEST_CASE("pragma wins over the literal bound") {
    CHECK(count("i=0;i<1;i++", Pragma{20, 1}) == IterationCount{20, CountProvenance::PragmaOverride});
}

TEST_CASE("negative counts are rejected") {
    CHECK_THROWS_AS(count("i=0;i<1;i++", Pragma{-1, 1}), Error);
    CHECK_THROWS_AS(count("i = 5; i < 1; i++"), Error);
    CHECK_THROWS_AS(count("i = 1; i > 5; i--"), Error);
}

TEST_CASE("pragma text") {
    CHECK(parse_pragma("// @iters 10") == 10);
    CHECK(parse_pragma("/* @iters 3 */") == 3);
    CHECK(parse_pragma("// @iters -2") == -2);
    CHECK_FALSE(parse_pragma("// iters 10").has_value());
    CHECK_FALSE(parse_pragma("// @iters ten").has_value());
}

TEST_CASE("while loops default to one iteration in a file") {
    auto pf = qtest::parse("while (x) { a(); }");
    CHECK(pf.nodes.at(0).as<LoopBlock>()->count == IterationCount{1, CountProvenance::ConfigDefault});
}
