#include "qmetric/report.hpp"

#include <iomanip>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace qmetric {

namespace {

using Json = nlohmann::ordered_json;

Json big_value(const BigInt& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return v.convert_to<std::int64_t>();
    return v.str();
}

Json exact(const Rational& r) {
    return Json::array({big_value(boost::multiprecision::numerator(r)),
                        big_value(boost::multiprecision::denominator(r))});
}

Json rounded(const Rational& r) {
    return std::stod(to_fixed(r, 2));
}

std::string_view loop_name(LoopKind k) {
    switch (k) {
    case LoopKind::For: return "for";
    case LoopKind::While: return "while";
    case LoopKind::DoWhile: return "do";
    }
    return "?";
}

Json counts_json(const SegmentCounts& c) {
    return Json{{"n1", c.simple}, {"n2", c.condition}, {"n3", c.loop}, {"n4", c.exception}, {"N", c.total}};
}

Json flow_json(const FlowReport& f) {
    return Json{{"backward_jumps", f.backward_jumps},
                {"unstructured_exits", f.unstructured_exits},
                {"orderly", f.orderly}};
}

Json file_json(const FileReport& f) {
    Json j;
    j["path"] = f.path;
    j["status"] = f.ok ? "ok" : "error";
    if (!f.ok) {
        j["error"] = f.error;
        return j;
    }
    j["total_lines"] = f.total_lines;
    j["raw_loc"] = f.raw_loc;
    j["sidecar_applied"] = f.sidecar_applied;
    Json segs = Json::array();
    for (const auto& s : f.segments)
        segs.push_back(Json{{"kind", to_string(s.kind)},
                            {"scope", s.scope},
                            {"start_line", s.span.first},
                            {"end_line", s.span.last},
                            {"impact", rounded(s.impact)},
                            {"impact_exact", exact(s.impact)}});
    j["segments"] = std::move(segs);
    Json loops = Json::array();
    for (const auto& l : f.loops)
        loops.push_back(Json{{"line", l.line},
                             {"kind", loop_name(l.loop)},
                             {"count", l.count.value},
                             {"provenance", to_string(l.count.provenance)}});
    j["loops"] = std::move(loops);
    j["counts"] = counts_json(f.counts);
    j["code_area"] = rounded(f.code_area);
    j["code_area_exact"] = exact(f.code_area);
    j["flow"] = flow_json(f.flow);
    Json diags = Json::array();
    for (const auto& d : f.diagnostics)
        diags.push_back(Json{{"line", d.line}, {"message", d.message}});
    j["diagnostics"] = std::move(diags);
    return j;
}

Json optional_rounded(const std::optional<Rational>& r) {
    return r ? rounded(*r) : Json(nullptr);
}

Json optional_exact(const std::optional<Rational>& r) {
    return r ? exact(*r) : Json(nullptr);
}

std::string to_json(const AnalysisReport& report) {
    Json root;
    root["v"] = kReportSchemaVersion;
    Json files = Json::array();
    for (const auto& f : report.files)
        files.push_back(file_json(f));
    root["files"] = std::move(files);

    const AggregateReport& a = report.aggregate;
    Json agg;
    agg["files_analyzed"] = a.files_analyzed;
    agg["files_failed"] = a.files_failed;
    agg["raw_loc"] = a.raw_loc;
    agg["counts"] = counts_json(a.counts);
    agg["code_area"] = rounded(a.code_area);
    agg["code_area_exact"] = exact(a.code_area);
    agg["execution_time_s"] = optional_rounded(a.execution_time_s);
    agg["execution_time_s_exact"] = optional_exact(a.execution_time_s);
    agg["qr"] = a.qr;
    agg["qr_normalized"] = rounded(a.qr_normalized);
    agg["efficiency"] = optional_rounded(a.efficiency);
    agg["efficiency_exact"] = optional_exact(a.efficiency);
    agg["percentage_of_baseline"] = rounded(a.percentage_of_baseline);
    agg["percentage_of_baseline_exact"] = exact(a.percentage_of_baseline);
    agg["meets_threshold"] = a.meets_threshold;
    agg["flow"] = flow_json(a.flow);
    agg["level"] = Json{{"level", a.level.level},
                        {"score", rounded(a.level_score)},
                        {"score_exact", exact(a.level_score)},
                        {"range", Json::array({rounded(a.level.low), rounded(a.level.high)})},
                        {"range_high_inclusive", a.level.high_inclusive},
                        {"in_literal_range", a.level.in_literal_range}};
    root["aggregate"] = std::move(agg);
    root["diagnostics"] = report.diagnostics;
    return root.dump(2) + "\n";
}

std::string fixed_or_dash(const std::optional<Rational>& r) {
    return r ? to_fixed(*r, 2) : "-";
}

std::string to_text(const AnalysisReport& report) {
    std::ostringstream out;
    const AggregateReport& a = report.aggregate;
    out << "qmetric report (schema v" << kReportSchemaVersion << ")\n";
    out << report.files.size() << " files";
    if (!report.files.empty())
        out << " (" << a.files_analyzed << " analyzed, " << a.files_failed << " failed)";
    out << "\n";

    for (const auto& f : report.files) {
        out << "\n== " << f.path;
        if (!f.ok) {
            out << "  [error]\n   " << f.error << "\n";
            continue;
        }
        out << "  [ok]  lines " << f.total_lines << ", raw LOC " << f.raw_loc;
        if (f.sidecar_applied)
            out << ", segments from sidecar";
        out << "\n";
        out << "   " << std::left << std::setw(4) << "#" << std::setw(6) << "kind" << std::setw(12)
            << "lines" << std::setw(24) << "scope" << std::right << std::setw(12) << "impact" << "\n";
        std::size_t idx = 1;
        for (const auto& s : f.segments) {
            std::string lines = std::to_string(s.span.first) + "-" + std::to_string(s.span.last);
            out << "   " << std::left << std::setw(4) << idx++ << std::setw(6) << to_string(s.kind)
                << std::setw(12) << lines << std::setw(24) << (s.scope.empty() ? "(file)" : s.scope)
                << std::right << std::setw(12) << to_fixed(s.impact, 2) << "\n";
        }
        for (const auto& l : f.loops)
            out << "   loop at line " << l.line << ": " << loop_name(l.loop) << " x" << l.count.value
                << " (" << to_string(l.count.provenance) << ")\n";
        out << "   code area " << to_fixed(f.code_area, 2) << "\n";
        for (const auto& d : f.diagnostics) {
            out << "   note";
            if (d.line)
                out << " line " << d.line;
            out << ": " << d.message << "\n";
        }
    }

    auto row = [&out](std::string_view label, const std::string& value) {
        out << "   " << std::left << std::setw(26) << label << value << "\n";
    };
    out << "\n== aggregate\n";
    row("raw LOC", std::to_string(a.raw_loc));
    row("segments n1/n2/n3/n4/N", std::to_string(a.counts.simple) + "/" + std::to_string(a.counts.condition) +
                                      "/" + std::to_string(a.counts.loop) + "/" +
                                      std::to_string(a.counts.exception) + "/" +
                                      std::to_string(a.counts.total));
    row("code area", to_fixed(a.code_area, 2) + "  (exact " + to_exact_string(a.code_area) + ")");
    row("execution time (s)", fixed_or_dash(a.execution_time_s));
    row("Qr", std::to_string(a.qr) + " (" + to_fixed(a.qr_normalized, 2) + ")");
    row("efficiency", a.efficiency ? to_fixed(*a.efficiency, 2) + "  (exact " +
                                         to_exact_string(*a.efficiency) + ")"
                                   : "-");
    row("baseline percentage", to_fixed(a.percentage_of_baseline, 2) + " %");
    row("meets 75% threshold", a.meets_threshold ? "yes" : "no");
    row("flow", "backward jumps " + std::to_string(a.flow.backward_jumps) + ", unstructured exits " +
                    std::to_string(a.flow.unstructured_exits) + ", " +
                    (a.flow.orderly ? "orderly" : "not orderly"));
    row("level", std::to_string(a.level.level) + " (score " + to_fixed(a.level_score, 2) + ", range [" +
                     to_exact_string(a.level.low) + ", " + to_exact_string(a.level.high) +
                     (a.level.high_inclusive ? "]" : ")") + ")");
    if (!report.diagnostics.empty()) {
        out << "\ndiagnostics:\n";
        for (const auto& d : report.diagnostics)
            out << "   - " << d << "\n";
    }
    return out.str();
}

}  // namespace

std::string emit_report(const AnalysisReport& report, ReportFormat format) {
    return format == ReportFormat::Json ? to_json(report) : to_text(report);
}

}  // namespace qmetric
