// End-to-end acceptance checks over the corpus. Prints one PASS/FAIL line
// per criterion; exits non-zero if any criterion fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "generators.hpp"
#include "qmetric/analyze.hpp"
#include "qmetric/classifier.hpp"
#include "qmetric/metrics.hpp"
#include "qmetric/report.hpp"
#include "test_support.hpp"

using namespace qmetric;
using qtest::R;

namespace {

const std::string kCorpus = QMETRIC_CORPUS;
const std::string kCli = QMETRIC_CLI;

struct Failure {
    std::string what;
};

void expect(bool ok, const std::string& what) {
    if (!ok)
        throw Failure{what};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Failure{"cannot read " + path};
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

FileReport analyze_file(const std::string& rel, const Config& cfg = {}) {
    std::vector<std::string> paths{kCorpus + "/" + rel};
    auto inputs = read_sources(paths);
    auto r = analyze_source(inputs.at(0), cfg);
    expect(r.ok, rel + ": " + r.error);
    return r;
}

const CodeSegment& only_segment(const FileReport& r, SegmentKind kind) {
    const CodeSegment* found = nullptr;
    for (const auto& s : r.segments)
        if (s.kind == kind) {
            expect(found == nullptr, "more than one " + std::string(to_string(kind)) + " segment");
            found = &s;
        }
    expect(found != nullptr, "no " + std::string(to_string(kind)) + " segment");
    return *found;
}

std::string show(const Rational& r) { return to_exact_string(r); }

void expect_eq(const Rational& got, const Rational& want, const std::string& what) {
    expect(got == want, what + ": got " + show(got) + ", want " + show(want));
}

struct CommandResult {
    int status = -1;
    std::string out;
};

CommandResult run_command(const std::string& cmd) {
    CommandResult res;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p)
        throw Failure{"popen failed: " + cmd};
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = std::fread(buf.data(), 1, buf.size(), p)) > 0) res.out.append(buf.data(), n);
    res.status = pclose(p);
    return res;
}

const std::vector<std::string> kWorkedFiles = {
    "worked_example/license_header.c", "worked_example/headers_and_helpers.c",
    "worked_example/if_else.c",        "worked_example/write_path.c",
    "worked_example/nested_write_loop.c",
};

std::string cli_worked_example(const std::string& extra) {
    std::string cmd = kCli + " --format json --exec-time 88 --qr 1,2,0,1,2 " + extra;
    for (const auto& f : kWorkedFiles) cmd += " '" + kCorpus + "/" + f + "'";
    auto res = run_command(cmd + " 2>/dev/null");
    expect(res.status == 0, "CLI exited with status " + std::to_string(res.status));
    return res.out;
}

// --- criteria --------------------------------------------------------------

void loop_area() {
    auto start = std::chrono::steady_clock::now();
    auto cfg = load_config(kCorpus + "/fixtures/call_weight_one.yaml");
    auto r = analyze_file("fixtures/only_loop.c", cfg);
    const auto& ll = only_segment(r, SegmentKind::LL);
    expect(r.loops.size() == 1 && r.loops[0].count.value == 100 &&
               r.loops[0].count.provenance == CountProvenance::LiteralBound,
           "loop bound not resolved to 100");
    expect_eq(ll.impact, 200, "loop impact");
    expect_eq(r.code_area, 200, "code area");
    auto elapsed = std::chrono::steady_clock::now() - start;
    expect(elapsed < std::chrono::seconds(1), "took longer than 1 s");
}

void comment_block() {
    auto r = analyze_file("worked_example/license_header.c");
    expect(r.segments.size() == 1, "expected a single segment");
    expect(only_segment(r, SegmentKind::SL).span == LineSpan{1, 20}, "segment does not span 20 lines");
    expect_eq(r.segments[0].impact, 10, "comment run impact");
}

void headers_and_helpers() {
    auto r = analyze_file("worked_example/headers_and_helpers.c");
    expect_eq(r.code_area, R("5.3"), "code impact");
    expect_eq(r.segments.at(0).impact, R("2.1"), "header run");
}

void if_else() {
    auto r = analyze_file("worked_example/if_else.c");
    const auto& cl = only_segment(r, SegmentKind::CL);
    auto* cond = cl.nodes.at(0).as<ConditionBlock>();
    expect(cond && cond->branches.size() == 2, "expected a two-branch condition");
    Rational x = 0;
    for (const auto& b : cond->branches) x += sum_impacts(b, WeightTable{});
    expect_eq(x, R("3.2"), "X (sum over branches)");
    expect_eq(cl.impact, R("1.6"), "CL");
    expect_eq(r.code_area, R("3.2"), "code impact");
}

void pragma_loop() {
    auto r = analyze_file("worked_example/counted_loop.c");
    expect(r.loops.size() == 1 && r.loops[0].count == IterationCount{10, CountProvenance::PragmaOverride},
           "pragma not applied");
    expect_eq(only_segment(r, SegmentKind::LL).impact, 5, "loop impact");
}

void pinned_segments() {
    auto r = analyze_file("worked_example/write_path.c");
    expect(r.sidecar_applied, "sidecar not applied");
    expect_eq(only_segment(r, SegmentKind::SL).impact, R("1.4"), "SL");
    expect_eq(only_segment(r, SegmentKind::CL).impact, R("3.2"), "CL");
    expect_eq(only_segment(r, SegmentKind::LL).impact, 5, "LL");
    expect_eq(r.code_area, R("9.6"), "segment impact");
}

void nested_loop() {
    auto r = analyze_file("worked_example/nested_write_loop.c");
    const auto& ll = only_segment(r, SegmentKind::LL);
    auto* loop = ll.nodes.at(0).as<LoopBlock>();
    expect(loop && loop->count == IterationCount{20, CountProvenance::PragmaOverride}, "outer loop not x20");
    expect_eq(sum_impacts(loop->body, WeightTable{}), R("9.6"), "loop body");
    expect_eq(ll.impact, 192, "LL");
}

void totals() {
    auto cfg = load_config(kCorpus + "/worked_example/qmetric.yaml");
    std::vector<std::string> paths;
    for (const auto& f : kWorkedFiles) paths.push_back(kCorpus + "/" + f);
    auto report = analyze(paths, cfg);
    expect(report.aggregate.files_failed == 0, "a corpus file failed");
    expect_eq(report.aggregate.code_area, R("220.1"), "code area");
    expect(report.aggregate.efficiency.has_value(), "efficiency not computed");
    expect_eq(*report.aggregate.efficiency, R("1320.6") / 88, "efficiency");
    expect(to_fixed(*report.aggregate.efficiency, 2) == "15.01", "displayed efficiency");

    auto j = nlohmann::json::parse(cli_worked_example(""));
    const auto& agg = j.at("aggregate");
    expect(agg.at("code_area_exact") == nlohmann::json::array({2201, 10}), "CLI code_area_exact");
    expect(agg.at("efficiency_exact") == nlohmann::json::array({6603, 440}), "CLI efficiency_exact");
    std::ostringstream disp;
    disp << agg.at("efficiency");
    expect(disp.str() == "15.01", "CLI efficiency shows " + disp.str());
}

void properties() {
    using namespace qtest;
    auto start = std::chrono::steady_clock::now();
    constexpr int kCases = 200;
    Rng rng(0xacce97);
    for (int i = 0; i < kCases; ++i) {
        std::string a = gen_source(rng), b = gen_source(rng);
        expect(area(a + b) == area(a) + area(b), "additivity:\n" + a + "\n--\n" + b);
    }
    for (int i = 0; i < kCases; ++i) {
        std::string body = join(gen_source_lines(rng));
        auto k = static_cast<long>(pick(rng, 50));
        std::string wrapped = "for (j = 0; j < " + std::to_string(k) + "; j++)\n{\n" + body + "}\n";
        expect(area(wrapped) == area(body) * k, "loop-wrap linearity:\n" + body);
    }
    for (int i = 0; i < kCases; ++i) {
        Rational a = area(gen_source(rng));
        Rational t(static_cast<long>(1 + pick(rng, 1000)), 3);
        int q1 = static_cast<int>(pick(rng, 6)), q2 = static_cast<int>(pick(rng, 5));
        expect(efficiency(a, t, q1 + q2) == efficiency(a, t, q1) + efficiency(a, t, q2), "Qr linearity");
    }
    for (int i = 0; i < kCases; ++i) {
        std::string body = join(gen_source_lines(rng));
        std::string grown = body + gen_simple_line(rng) + "\n";
        std::string prefixed = gen_simple_line(rng) + "\n" + body;
        expect(area(grown) >= area(body) && area(prefixed) >= area(body), "monotonicity:\n" + body);
    }
    for (int i = 0; i < kCases; ++i) {
        std::size_t line = 1;
        auto tree = gen_tree(rng, 4, line);
        auto w = gen_weights(rng);
        auto segs = segment(tree);
        Rational total = 0;
        for (auto& s : segs) total += segment_impact(s, w);
        expect(total == reference_impact(tree, w), "substitution consistency");
    }
    auto elapsed = std::chrono::steady_clock::now() - start;
    expect(elapsed < std::chrono::seconds(30), "property suite took longer than 30 s");
}

void classification() {
    struct Row {
        const char* score;
        int level;
    };
    for (auto [score, level] : {Row{"9.0", 1}, Row{"7.0", 2}, Row{"5.0", 3}, Row{"2.0", 4}}) {
        auto q = classify_level(R(score));
        expect(q.level == level && q.in_literal_range, std::string("score ") + score);
    }
    auto gap_hi = classify_level(R("8.2"));
    auto gap_lo = classify_level(R("6.2"));
    expect(gap_hi.level == 2 && !gap_hi.in_literal_range, "8.2 should be level 2, flagged");
    expect(gap_lo.level == 3 && !gap_lo.in_literal_range, "6.2 should be level 3, flagged");

    std::string first = cli_worked_example("");
    std::string second = cli_worked_example("--jobs 1");
    expect(!first.empty() && first == second, "CLI reports differ between runs");
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<void()> check;
    };
    const Criterion criteria[] = {
        {"loop area: 100 iterations x 2 statements at weight 1.0 = 200", loop_area},
        {"comment block: 20 comments = 10", comment_block},
        {"headers and helpers: 2.1 + 0.8 + 2.4 = 5.3", headers_and_helpers},
        {"if/else: X = 3.2, CL = 1.6, code impact 3.2", if_else},
        {"pragma loop: 10 x 0.5 = 5", pragma_loop},
        {"pinned segments: 1.4 + 3.2 + 5 = 9.6", pinned_segments},
        {"nested loop: 20 x 9.6 = 192", nested_loop},
        {"totals: code area 220.1, efficiency 1320.6/88 shown as 15.01", totals},
        {"property suite: additivity, wrap, Qr, monotonicity, substitution", properties},
        {"classification levels, gap scores, deterministic reports", classification},
    };
    int failed = 0;
    int index = 0;
    for (const auto& c : criteria) {
        ++index;
        std::string detail;
        bool ok = true;
        try {
            c.check();
        } catch (const Failure& f) {
            ok = false;
            detail = f.what;
        } catch (const std::exception& e) {
            ok = false;
            detail = e.what();
        }
        std::cout << (ok ? "PASS" : "FAIL") << "  " << index << ". " << c.name;
        if (!ok) {
            std::cout << "\n      " << detail;
            ++failed;
        }
        std::cout << "\n";
    }
    std::cout << std::size(criteria) - failed << "/" << std::size(criteria)
              << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
