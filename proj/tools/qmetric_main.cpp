// qmetric: impact-weighted code area, efficiency and quality level for
// C-like sources.
//
// Exit status: 0 success, 1 a file failed, 2 configuration error,
// 3 --gate given and the 75% baseline threshold was not met.

#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qmetric/analyze.hpp"
#include "qmetric/config.hpp"
#include "qmetric/report.hpp"

namespace {

constexpr int kExitFileError = 1;
constexpr int kExitConfigError = 2;
constexpr int kExitGateFailed = 3;

qmetric::QualityAttributes parse_qr(const std::string& text) {
    std::vector<int> scores;
    std::stringstream in(text);
    for (std::string item; std::getline(in, item, ',');) {
        auto v = qmetric::parse_decimal(item);
        if (!v || boost::multiprecision::denominator(*v) != 1)
            throw qmetric::Error(qmetric::ErrorCode::ConfigParse, "--qr expects five integers, got '" + text + "'");
        scores.push_back(boost::multiprecision::numerator(*v).convert_to<int>());
    }
    if (scores.size() != 5)
        throw qmetric::Error(qmetric::ErrorCode::ConfigParse, "--qr expects five comma-separated scores");
    qmetric::QualityAttributes q{scores[0], scores[1], scores[2], scores[3], scores[4]};
    qmetric::quality_quotient(q);  // range check
    return q;
}

qmetric::Rational parse_seconds(const std::string& text, const char* flag) {
    auto v = qmetric::parse_decimal(text);
    if (!v)
        throw qmetric::Error(qmetric::ErrorCode::ConfigParse, std::string(flag) + " expects a number");
    return *v;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Impact-weighted code area and quality metrics for C-like sources"};
    app.set_version_flag("--version", "qmetric 1.0.0");

    std::vector<std::string> paths;
    std::optional<std::string> config_path;
    std::optional<std::string> exec_time;
    std::optional<std::string> exec_time_avg;
    std::optional<std::string> qr;
    std::optional<std::string> format;
    std::vector<std::string> sidecars;
    bool weights_dump = false;
    bool gate = false;
    unsigned jobs = 0;

    app.add_option("paths", paths, "Source files to analyze ('-' reads standard input)");
    app.add_option("--config", config_path, "YAML config with weights/qr/rubric/analysis sections");
    auto* et = app.add_option("--exec-time", exec_time, "Total execution time in seconds");
    auto* eta = app.add_option("--exec-time-avg", exec_time_avg, "Average execution time per segment");
    et->excludes(eta);
    app.add_option("--qr", qr, "Quality attributes s,e,u,o,p (each 0, 1 or 2)");
    app.add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--segments", sidecars, "Segmentation sidecar <source>.segments (repeatable)");
    app.add_flag("--weights-dump", weights_dump, "Print the effective weight table and exit");
    app.add_flag("--gate", gate, "Exit 3 unless the 75% baseline threshold is met");
    app.add_option("--jobs", jobs, "Worker threads (0 = hardware concurrency)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitConfigError;
    }

    qmetric::Config config;
    std::map<std::string, std::string> sidecar_map;
    try {
        config = qmetric::load_config(config_path);
        if (exec_time)
            config.exec_time = qmetric::ExecutionTimeModel::total(parse_seconds(*exec_time, "--exec-time"));
        if (exec_time_avg)
            config.exec_time = qmetric::ExecutionTimeModel::per_segment_average(
                parse_seconds(*exec_time_avg, "--exec-time-avg"));
        if (qr) {
            config.qr = parse_qr(*qr);
            std::erase_if(config.diagnostics, [](const std::string& d) { return d.starts_with("qr"); });
        }
        if (format)
            config.format = *format == "json" ? qmetric::ReportFormat::Json : qmetric::ReportFormat::Text;
        for (const auto& s : sidecars) {
            constexpr std::string_view suffix = ".segments";
            if (!std::string_view(s).ends_with(suffix) || s.size() == suffix.size())
                throw qmetric::Error(qmetric::ErrorCode::ConfigParse,
                                     "--segments expects a '<source>.segments' path, got " + s);
            sidecar_map[s.substr(0, s.size() - suffix.size())] = s;
        }
    } catch (const qmetric::Error& e) {
        std::cerr << "qmetric: " << e.what() << "\n";
        return kExitConfigError;
    }

    if (weights_dump) {
        std::cout << qmetric::dump_weights(config.weights);
        return 0;
    }

    auto inputs = qmetric::read_sources(paths, sidecar_map);
    qmetric::AnalysisReport report = qmetric::analyze_sources(inputs, config, jobs);
    std::cout << qmetric::emit_report(report, config.format);

    if (report.aggregate.files_failed > 0)
        return kExitFileError;
    if (gate && !report.aggregate.meets_threshold)
        return kExitGateFailed;
    return 0;
}
