#include <doctest.h>

#include "generators.hpp"
#include "qmetric/metrics.hpp"
#include "qmetric/segmenter.hpp"
#include "test_support.hpp"

using namespace qmetric;
using namespace qtest;

namespace {

constexpr int kCases = 200;

Rng seeded(std::uint64_t salt) { return Rng(0x5eed0000ULL + salt); }

std::vector<std::string> split_lines(const std::string& s) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start < s.size()) {
        auto nl = s.find('\n', start);
        out.push_back(s.substr(start, nl - start + 1));
        start = nl + 1;
    }
    return out;
}

std::string trimmed(const std::string& s) {
    auto b = s.find_first_not_of(" \t\n");
    return b == std::string::npos ? "" : s.substr(b, s.find_last_not_of(" \t\n") - b + 1);
}

// A line boundary where a new statement can go without re-attaching an
// else/catch or a brace to a different owner.
bool insertable_after(const std::vector<std::string>& lines, std::size_t i) {
    std::string prev = i == 0 ? "" : trimmed(lines[i - 1]);
    std::string next = i < lines.size() ? trimmed(lines[i]) : "";
    if (next.starts_with("else") || next.starts_with("catch") || next == "{")
        return false;
    if (prev.empty() || prev == "{" || prev == "}")
        return true;
    return prev.ends_with(";") || prev.ends_with("*/") || prev.starts_with("//") || prev.starts_with("#");
}

}  // namespace

TEST_CASE("additivity under file concatenation") {
    auto rng = seeded(1);
    for (int i = 0; i < kCases; ++i) {
        std::string a = gen_source(rng), b = gen_source(rng);
        CAPTURE(a);
        CAPTURE(b);
        REQUIRE(area(a + b) == area(a) + area(b));
    }
}

TEST_CASE("loop-wrap linearity") {
    auto rng = seeded(2);
    for (int i = 0; i < kCases; ++i) {
        std::string body = join(gen_source_lines(rng));
        auto k = static_cast<long>(pick(rng, 50));
        std::string wrapped = "for (j = 0; j < " + std::to_string(k) + "; j++)\n{\n" + body + "}\n";
        std::string pragma = "// @iters " + std::to_string(k) + "\nwhile (more)\n{\n" + body + "}\n";
        CAPTURE(body);
        Rational base = area(body);
        REQUIRE(area(wrapped) == base * k);
        REQUIRE(area(pragma) == base * k);
    }
}

TEST_CASE("monotonicity under statement insertion") {
    auto rng = seeded(3);
    for (int i = 0; i < kCases; ++i) {
        auto lines = split_lines(join(gen_source_lines(rng)));
        std::vector<std::size_t> slots;
        for (std::size_t s = 0; s <= lines.size(); ++s)
            if (insertable_after(lines, s)) slots.push_back(s);
        REQUIRE_FALSE(slots.empty());
        std::string before;
        for (auto& l : lines) before += l;
        auto at = slots[pick(rng, slots.size())];
        lines.insert(lines.begin() + static_cast<std::ptrdiff_t>(at), gen_simple_line(rng) + "\n");
        std::string after;
        for (auto& l : lines) after += l;
        CAPTURE(before);
        CAPTURE(after);
        REQUIRE(area(after) >= area(before));
    }
}

TEST_CASE("substitution consistency against the reference evaluator") {
    auto rng = seeded(4);
    for (int i = 0; i < kCases; ++i) {
        std::size_t line = 1;
        auto tree = gen_tree(rng, 4, line);
        auto weights = gen_weights(rng);
        Rational expected = reference_impact(tree, weights);
        REQUIRE(sum_impacts(tree, weights) == expected);
        auto segs = segment(tree);
        Rational total = 0;
        for (auto& s : segs) total += segment_impact(s, weights);
        REQUIRE(total == expected);
        REQUIRE(code_area(segs) == expected);
    }
}

TEST_CASE("substitution consistency on parsed sources") {
    auto rng = seeded(5);
    for (int i = 0; i < kCases; ++i) {
        std::string src = gen_source(rng);
        auto weights = gen_weights(rng);
        auto pf = parse(src);
        CAPTURE(src);
        Config cfg;
        cfg.weights = weights;
        REQUIRE(area(src, cfg) == reference_impact(pf.nodes, weights));
    }
}

TEST_CASE("Qr linearity of efficiency") {
    auto rng = seeded(6);
    for (int i = 0; i < kCases; ++i) {
        Rational a = area(gen_source(rng));
        Rational t(static_cast<long>(1 + pick(rng, 1000)), static_cast<long>(1 + pick(rng, 10)));
        int q1 = static_cast<int>(pick(rng, 6)), q2 = static_cast<int>(pick(rng, 5));
        REQUIRE(efficiency(a, t, q1 + q2) == efficiency(a, t, q1) + efficiency(a, t, q2));
        REQUIRE(efficiency(a, t, q1) == q1 * efficiency(a, t, 1));
        REQUIRE(baseline_percentage(a, q1 + q2) == baseline_percentage(a, q1) + baseline_percentage(a, q2));
    }
}

TEST_CASE("inverse linearity in execution time") {
    auto rng = seeded(7);
    for (int i = 0; i < kCases; ++i) {
        Rational a = area(gen_source(rng));
        Rational t(static_cast<long>(1 + pick(rng, 1000)), 7);
        auto k = static_cast<long>(1 + pick(rng, 99));
        int q = static_cast<int>(pick(rng, 11));
        REQUIRE(efficiency(a, t * k, q) * k == efficiency(a, t, q));
    }
}
