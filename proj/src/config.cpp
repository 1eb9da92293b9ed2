#include "qmetric/config.hpp"

#include <fstream>
#include <sstream>

#include <yaml-cpp/yaml.h>

namespace qmetric {

std::string_view weight_key(StatementKind kind) {
    switch (kind) {
    case StatementKind::Comment: return "comment";
    case StatementKind::HeaderInclude: return "header_include";
    case StatementKind::Declaration: return "declaration";
    case StatementKind::InitTermination: return "init_termination";
    case StatementKind::SimpleAssignment: return "simple_assignment";
    case StatementKind::ComplexAssignment: return "complex_assignment";
    case StatementKind::Expression: return "expression";
    case StatementKind::FunctionCall: return "function_call";
    case StatementKind::Return: return "return";
    }
    return "?";
}

namespace {

std::size_t line_of(const YAML::Node& n) {
    return static_cast<std::size_t>(n.Mark().line) + 1;
}

std::string scalar(const YAML::Node& n, std::string_view key) {
    if (!n.IsScalar())
        throw Error(ErrorCode::ConfigParse, std::string(key) + " must be a scalar", line_of(n));
    return n.Scalar();
}

Rational rational_value(const YAML::Node& n, std::string_view key) {
    auto v = parse_decimal(scalar(n, key));
    if (!v)
        throw Error(ErrorCode::ConfigParse, std::string(key) + " is not a number", line_of(n));
    return *v;
}

std::int64_t int_value(const YAML::Node& n, std::string_view key) {
    Rational v = rational_value(n, key);
    if (boost::multiprecision::denominator(v) != 1)
        throw Error(ErrorCode::ConfigParse, std::string(key) + " must be an integer", line_of(n));
    return boost::multiprecision::numerator(v).convert_to<std::int64_t>();
}

bool bool_value(const YAML::Node& n, std::string_view key) {
    std::string s = scalar(n, key);
    if (s == "true" || s == "yes" || s == "on") return true;
    if (s == "false" || s == "no" || s == "off") return false;
    throw Error(ErrorCode::ConfigParse, std::string(key) + " must be true or false", line_of(n));
}

int score_value(const YAML::Node& n, std::string_view key) {
    auto v = int_value(n, key);
    if (v < 0 || v > 2)
        throw Error(ErrorCode::AttributeOutOfRange,
                    std::string(key) + " = " + std::to_string(v) + " (expected 0, 1 or 2)", line_of(n));
    return static_cast<int>(v);
}

void require_map(const YAML::Node& n, std::string_view section) {
    if (!n.IsMap())
        throw Error(ErrorCode::ConfigParse, std::string(section) + " must be a mapping", line_of(n));
}

void read_weights(const YAML::Node& sec, Config& cfg) {
    require_map(sec, "weights");
    for (const auto& kv : sec) {
        std::string key = kv.first.as<std::string>();
        if (key == "exception_multiplier") {
            cfg.weights.exception_multiplier_enabled = bool_value(kv.second, key);
            continue;
        }
        bool found = false;
        for (auto kind : kAllStatementKinds) {
            if (weight_key(kind) != key)
                continue;
            Rational w = rational_value(kv.second, key);
            if (w < 0 || w > 1)
                throw Error(ErrorCode::InvalidWeight,
                            key + " weight " + scalar(kv.second, key) + " outside [0, 1]",
                            line_of(kv.second));
            cfg.weights.set(kind, w);
            found = true;
        }
        if (!found)
            throw Error(ErrorCode::UnknownKey, "weights." + key, line_of(kv.first));
    }
}

void read_qr(const YAML::Node& sec, Config& cfg, std::vector<std::string>& seen) {
    require_map(sec, "qr");
    for (const auto& kv : sec) {
        std::string key = kv.first.as<std::string>();
        int* slot = nullptr;
        if (key == "security") slot = &cfg.qr.security;
        else if (key == "execution_time") slot = &cfg.qr.execution_time;
        else if (key == "user_friendliness") slot = &cfg.qr.user_friendliness;
        else if (key == "other_metrics") slot = &cfg.qr.other_metrics;
        else if (key == "environment_selection") slot = &cfg.qr.environment_selection;
        else throw Error(ErrorCode::UnknownKey, "qr." + key, line_of(kv.first));
        *slot = score_value(kv.second, key);
        seen.push_back(key);
    }
}

void read_rubric(const YAML::Node& sec, Config& cfg) {
    require_map(sec, "rubric");
    for (const auto& kv : sec) {
        std::string key = kv.first.as<std::string>();
        bool found = false;
        for (auto q : kRubricQuestions) {
            if (to_string(q) == key) {
                cfg.rubric[q] = score_value(kv.second, key);
                found = true;
            }
        }
        if (!found)
            throw Error(ErrorCode::UnknownKey, "rubric." + key, line_of(kv.first));
    }
}

void read_analysis(const YAML::Node& sec, Config& cfg) {
    require_map(sec, "analysis");
    for (const auto& kv : sec) {
        std::string key = kv.first.as<std::string>();
        const YAML::Node& v = kv.second;
        if (key == "default_iterations") {
            auto n = int_value(v, key);
            if (n < 0)
                throw Error(ErrorCode::ConfigParse, "default_iterations must be >= 0", line_of(v));
            cfg.frontend.default_iterations = static_cast<std::uint64_t>(n);
        } else if (key == "flow_exit_limit") {
            auto n = int_value(v, key);
            if (n < 0)
                throw Error(ErrorCode::ConfigParse, "flow_exit_limit must be >= 0", line_of(v));
            cfg.flow_exit_limit = static_cast<std::size_t>(n);
        } else if (key == "flow_penalty") {
            Rational p = rational_value(v, key);
            if (p < 0 || p > 10)
                throw Error(ErrorCode::ConfigParse, "flow_penalty must lie in [0, 10]", line_of(v));
            cfg.flow_penalty = p;
        } else if (key == "report_format") {
            std::string f = scalar(v, key);
            if (f == "text") cfg.format = ReportFormat::Text;
            else if (f == "json") cfg.format = ReportFormat::Json;
            else throw Error(ErrorCode::ConfigParse, "report_format must be text or json", line_of(v));
        } else if (key == "exec_time" || key == "exec_time_avg") {
            Rational s = rational_value(v, key);
            try {
                cfg.exec_time = key == "exec_time" ? ExecutionTimeModel::total(s)
                                                   : ExecutionTimeModel::per_segment_average(s);
            } catch (const Error& e) {
                throw Error(e.code(), key + " must be positive", line_of(v));
            }
        } else if (key == "init_term_names") {
            if (!v.IsSequence())
                throw Error(ErrorCode::ConfigParse, "init_term_names must be a list", line_of(v));
            cfg.frontend.init_term_names.clear();
            for (const auto& item : v)
                cfg.frontend.init_term_names.push_back(scalar(item, key));
        } else {
            throw Error(ErrorCode::UnknownKey, "analysis." + key, line_of(kv.first));
        }
    }
}

void apply_defaults(Config& cfg, const std::vector<std::string>& qr_seen, bool qr_section) {
    for (auto q : kRubricQuestions) {
        if (!cfg.rubric[q]) {
            cfg.rubric[q] = 1;
            cfg.diagnostics.push_back("rubric." + std::string(to_string(q)) + " not answered; using 1");
        }
    }
    if (!qr_section) {
        cfg.diagnostics.push_back("qr not supplied; every attribute defaults to 1");
        return;
    }
    for (auto key : {"security", "execution_time", "user_friendliness", "other_metrics",
                     "environment_selection"})
        if (std::find(qr_seen.begin(), qr_seen.end(), key) == qr_seen.end())
            cfg.diagnostics.push_back("qr." + std::string(key) + " not supplied; using 1");
}

}  // namespace

Config parse_config(std::string_view text) {
    Config cfg;
    YAML::Node root;
    try {
        root = YAML::Load(std::string(text));
    } catch (const YAML::Exception& e) {
        throw Error(ErrorCode::ConfigParse, e.msg, static_cast<std::size_t>(e.mark.line) + 1);
    }
    std::vector<std::string> qr_seen;
    bool qr_section = false;
    if (root && !root.IsNull()) {
        require_map(root, "config");
        for (const auto& kv : root) {
            std::string section = kv.first.as<std::string>();
            const YAML::Node& body = kv.second;
            if (body.IsNull())
                continue;
            try {
                if (section == "weights") {
                    read_weights(body, cfg);
                } else if (section == "qr") {
                    qr_section = true;
                    read_qr(body, cfg, qr_seen);
                } else if (section == "rubric") {
                    read_rubric(body, cfg);
                } else if (section == "analysis") {
                    read_analysis(body, cfg);
                } else {
                    throw Error(ErrorCode::UnknownKey, section, line_of(kv.first));
                }
            } catch (const YAML::Exception& e) {
                throw Error(ErrorCode::ConfigParse, e.msg, static_cast<std::size_t>(e.mark.line) + 1);
            }
        }
    }
    apply_defaults(cfg, qr_seen, qr_section);
    return cfg;
}

Config load_config(const std::optional<std::filesystem::path>& path) {
    if (!path)
        return parse_config("");
    std::ifstream in(*path, std::ios::binary);
    if (!in)
        throw Error(ErrorCode::Io, "cannot read config " + path->string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

std::string dump_weights(const WeightTable& weights) {
    std::ostringstream out;
    for (auto kind : kAllStatementKinds)
        out << weight_key(kind) << " = " << to_exact_string(weights[kind]) << "\n";
    out << "exception_multiplier = " << (weights.exception_multiplier_enabled ? "true" : "false") << "\n";
    return out.str();
}

}  // namespace qmetric
