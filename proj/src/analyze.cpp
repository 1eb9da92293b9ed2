#include "qmetric/analyze.hpp"

#include <atomic>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <thread>

#include "qmetric/lexer.hpp"

namespace qmetric {

namespace {

void collect_loops(const NodeList& nodes, std::vector<LoopRecord>& out) {
    for (const auto& node : nodes) {
        if (const auto* l = node.as<LoopBlock>()) {
            out.push_back({node.span.first, l->loop, l->count});
            collect_loops(l->body, out);
        } else if (const auto* c = node.as<ConditionBlock>()) {
            for (const auto& b : c->branches)
                collect_loops(b, out);
        } else if (const auto* e = node.as<ExceptionBlock>()) {
            collect_loops(e->body, out);
        } else if (const auto* f = node.as<FunctionDef>()) {
            collect_loops(f->body, out);
        }
    }
}

std::size_t non_blank_lines(std::string_view text) {
    std::size_t n = 0;
    bool content = false;
    for (char c : text) {
        if (c == '\n') {
            n += content;
            content = false;
        } else if (c != ' ' && c != '\t' && c != '\r' && c != '\v' && c != '\f') {
            content = true;
        }
    }
    return n + content;
}

std::optional<std::string> slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

FileReport analyze_source(const SourceInput& input, const Config& config) {
    FileReport r;
    r.path = input.path;
    if (input.read_error) {
        r.ok = false;
        r.error = *input.read_error;
        return r;
    }
    r.total_lines = count_lines(input.text);
    r.raw_loc = non_blank_lines(input.text);
    try {
        TokenStream stream = tokenize(input.text);
        r.unknown_chars = stream.unknown_chars;
        if (stream.unknown_chars > 0)
            r.diagnostics.push_back({0, std::to_string(stream.unknown_chars) +
                                            " character(s) outside the C-like grammar"});
        ParsedFile parsed = build_block_tree(stream.tokens, config.frontend);
        std::move(parsed.diagnostics.begin(), parsed.diagnostics.end(), std::back_inserter(r.diagnostics));

        if (input.sidecar) {
            auto overrides = parse_sidecar(*input.sidecar);
            r.segments = apply_overrides(parsed.nodes, overrides);
            r.sidecar_applied = true;
        } else {
            r.segments = segment(parsed.nodes);
        }
        for (auto& s : r.segments)
            segment_impact(s, config.weights);
        r.counts = segment_counts(r.segments);
        r.code_area = code_area(r.segments);
        collect_loops(parsed.nodes, r.loops);
        r.flow = flow_orderliness(parsed.nodes, stream.tokens, config.flow_exit_limit);
    } catch (const Error& e) {
        FileReport failed;
        failed.path = r.path;
        failed.ok = false;
        failed.error = e.what();
        failed.total_lines = r.total_lines;
        failed.raw_loc = r.raw_loc;
        return failed;
    }
    return r;
}

AnalysisReport assemble_report(std::vector<FileReport> files, const Config& config) {
    AnalysisReport report;
    report.files = std::move(files);
    report.diagnostics = config.diagnostics;
    AggregateReport& agg = report.aggregate;

    std::vector<FlowReport> flows;
    for (const auto& f : report.files) {
        if (!f.ok) {
            ++agg.files_failed;
            continue;
        }
        ++agg.files_analyzed;
        agg.raw_loc += f.raw_loc;
        agg.code_area += code_area(f.segments);
        SegmentCounts c = segment_counts(f.segments);
        agg.counts.simple += c.simple;
        agg.counts.condition += c.condition;
        agg.counts.loop += c.loop;
        agg.counts.exception += c.exception;
        agg.counts.total += c.total;
        flows.push_back(f.flow);
    }

    agg.qr = quality_quotient(config.qr);
    agg.qr_normalized = Rational(agg.qr, 10);
    agg.percentage_of_baseline = baseline_percentage(agg.code_area, agg.qr);
    agg.meets_threshold = meets_threshold(agg.percentage_of_baseline);

    if (config.exec_time) {
        try {
            agg.execution_time_s = execution_time(*config.exec_time, agg.counts.total);
            agg.efficiency = efficiency(agg.code_area, *agg.execution_time_s, agg.qr);
        } catch (const Error& e) {
            report.diagnostics.push_back(std::string("efficiency not computed: ") + e.what());
            agg.execution_time_s.reset();
        }
    } else {
        report.diagnostics.push_back("no execution time supplied; efficiency not computed");
    }

    agg.flow = merge_flow(flows, config.flow_exit_limit);
    // Configs built in code may leave answers open; parse_config already
    // filled (and reported) them for file-based configs.
    LevelRubric rubric = config.rubric;
    for (auto q : kRubricQuestions)
        if (!rubric[q]) {
            rubric[q] = 1;
            report.diagnostics.push_back("rubric." + std::string(to_string(q)) + " not answered; using 1");
        }
    agg.level_score = rubric_score(rubric, agg.flow, config.flow_penalty);
    agg.level = classify_level(agg.level_score);
    if (!agg.level.in_literal_range)
        report.diagnostics.push_back("level score " + to_exact_string(agg.level_score) +
                                     " lies outside the published level ranges; assigned by closing "
                                     "the intervals upward");
    return report;
}

AnalysisReport analyze_sources(std::span<const SourceInput> inputs, const Config& config, unsigned threads) {
    std::vector<FileReport> files(inputs.size());
    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(inputs.size(), 1)));

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < inputs.size(); i = next++)
            files[i] = analyze_source(inputs[i], config);
    };
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 1; t < threads; ++t)
            pool.emplace_back(worker);
        worker();
    }
    return assemble_report(std::move(files), config);
}

std::vector<SourceInput> read_sources(std::span<const std::string> paths,
                                      const std::map<std::string, std::string>& sidecars) {
    std::vector<SourceInput> out;
    out.reserve(paths.size());
    for (const auto& p : paths) {
        SourceInput in;
        in.path = p;
        if (p == "-") {
            in.text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
        } else if (auto text = slurp(p)) {
            in.text = std::move(*text);
        } else {
            in.read_error = std::string(to_string(ErrorCode::Io)) + ": cannot read " + p;
            out.push_back(std::move(in));
            continue;
        }
        std::optional<std::string> sidecar_path;
        if (auto it = sidecars.find(p); it != sidecars.end())
            sidecar_path = it->second;
        else if (p != "-" && std::filesystem::exists(p + ".segments"))
            sidecar_path = p + ".segments";
        if (sidecar_path) {
            if (auto text = slurp(*sidecar_path))
                in.sidecar = std::move(*text);
            else
                in.read_error = std::string(to_string(ErrorCode::Io)) + ": cannot read " + *sidecar_path;
        }
        out.push_back(std::move(in));
    }
    return out;
}

AnalysisReport analyze(std::span<const std::string> paths, const Config& config,
                       const std::map<std::string, std::string>& sidecars) {
    auto inputs = read_sources(paths, sidecars);
    return analyze_sources(inputs, config);
}

}  // namespace qmetric
