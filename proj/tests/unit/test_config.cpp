#include <doctest.h>

#include "qmetric/config.hpp"
#include "qmetric/error.hpp"
#include "test_support.hpp"

using namespace qmetric;
using qtest::R;

static ErrorCode config_error(std::string_view yaml) {
    try {
        parse_config(yaml);
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return ErrorCode::Io;
}

TEST_CASE("empty config is all defaults") {
    auto c = parse_config("");
    CHECK(c.weights[StatementKind::Comment] == R("0.5"));
    CHECK(c.qr == QualityAttributes{});
    CHECK_FALSE(c.exec_time.has_value());
    CHECK(c.format == ReportFormat::Text);
    CHECK(c.diagnostics.size() == 6);  // five rubric answers, qr
}

TEST_CASE("overrides") {
    auto c = parse_config(R"(
weights:
  function_call: 1.0
  comment: 0.25
  exception_multiplier: false
qr: {security: 1, execution_time: 2, user_friendliness: 0, other_metrics: 1, environment_selection: 2}
rubric: {segment_flow: 2, object_reuse: 2, commenting: 1, error_controls: 1, security_customization: 1}
analysis:
  default_iterations: 3
  flow_exit_limit: 2
  flow_penalty: 0.5
  report_format: json
  exec_time: 88
  init_term_names: [teardown]
)");
    CHECK(c.weights[StatementKind::FunctionCall] == 1);
    CHECK(c.weights[StatementKind::Comment] == R("0.25"));
    CHECK_FALSE(c.weights.exception_multiplier_enabled);
    CHECK(quality_quotient(c.qr) == 6);
    CHECK(c.rubric[RubricQuestion::SegmentFlow] == 2);
    CHECK(c.frontend.default_iterations == 3);
    CHECK(c.frontend.init_term_names == std::vector<std::string>{"teardown"});
    CHECK(c.flow_exit_limit == 2);
    CHECK(c.flow_penalty == R("0.5"));
    CHECK(c.format == ReportFormat::Json);
    REQUIRE(c.exec_time);
    CHECK(c.exec_time->seconds() == 88);
    CHECK(c.diagnostics.empty());
}

TEST_CASE("config errors") {
    CHECK(config_error("weights: {bogus: 1}") == ErrorCode::UnknownKey);
    CHECK(config_error("colours: {}") == ErrorCode::UnknownKey);
    CHECK(config_error("weights: {comment: 1.5}") == ErrorCode::InvalidWeight);
    CHECK(config_error("weights: {comment: lots}") == ErrorCode::ConfigParse);
    CHECK(config_error("weights: [1, 2]") == ErrorCode::ConfigParse);
    CHECK(config_error("qr: {security: 3}") == ErrorCode::AttributeOutOfRange);
    CHECK(config_error("analysis: {exec_time: 0}") == ErrorCode::NonPositiveTime);
    CHECK(config_error("key: [unclosed") == ErrorCode::ConfigParse);
}

TEST_CASE("missing file") {
    CHECK_THROWS_AS(load_config(std::filesystem::path("/nonexistent/qmetric.yaml")), Error);
    CHECK_NOTHROW(load_config(std::nullopt));
}

TEST_CASE("weights dump lists every kind") {
    auto text = dump_weights(WeightTable{});
    for (auto k : kAllStatementKinds) CHECK(text.find(std::string(weight_key(k)) + " = ") != std::string::npos);
    CHECK(text.find("exception_multiplier = true") != std::string::npos);
}
