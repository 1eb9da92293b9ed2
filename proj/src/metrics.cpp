#include "qmetric/metrics.hpp"

#include "qmetric/error.hpp"

namespace qmetric {

int quality_quotient(const QualityAttributes& a) {
    const std::pair<const char*, int> fields[] = {
        {"security", a.security},
        {"execution_time", a.execution_time},
        {"user_friendliness", a.user_friendliness},
        {"other_metrics", a.other_metrics},
        {"environment_selection", a.environment_selection},
    };
    int sum = 0;
    for (const auto& [name, v] : fields) {
        if (v < 0 || v > 2)
            throw Error(ErrorCode::AttributeOutOfRange,
                        std::string(name) + " = " + std::to_string(v) + " (expected 0, 1 or 2)");
        sum += v;
    }
    return sum;
}

ExecutionTimeModel ExecutionTimeModel::total(const Rational& seconds) {
    if (seconds <= 0)
        throw Error(ErrorCode::NonPositiveTime, "execution time must be positive");
    return {Mode::TotalSeconds, seconds};
}

ExecutionTimeModel ExecutionTimeModel::per_segment_average(const Rational& seconds) {
    if (seconds <= 0)
        throw Error(ErrorCode::NonPositiveTime, "average segment time must be positive");
    return {Mode::PerSegmentAverage, seconds};
}

Rational execution_time(const ExecutionTimeModel& model, std::size_t segment_count) {
    if (model.mode() == ExecutionTimeModel::Mode::TotalSeconds)
        return model.seconds();
    if (segment_count == 0)
        throw Error(ErrorCode::ZeroSegments, "per-segment average time with no segments");
    return Rational(BigInt(segment_count)) * model.seconds();
}

Rational code_area(std::span<const CodeSegment> segments) {
    Rational total = 0;
    for (const auto& s : segments)
        total += s.impact;
    return total;
}

Rational efficiency(const Rational& area, const Rational& time_s, int qr) {
    if (time_s <= 0)
        throw Error(ErrorCode::NonPositiveTime, "execution time must be positive");
    return area / time_s * qr;
}

Rational baseline_percentage(const Rational& area, int qr) {
    // 100000 LOC at quality 7.5.
    static const Rational baseline = Rational(100000) * Rational(15, 2);
    return Rational(100) * area * qr / baseline;
}

EfficiencyResult evaluate(const Rational& area, const Rational& time_s, int qr) {
    EfficiencyResult r;
    r.code_area = area;
    r.execution_time_s = time_s;
    r.qr = qr;
    r.efficiency = efficiency(area, time_s, qr);
    r.percentage_of_baseline = baseline_percentage(area, qr);
    r.meets_threshold = meets_threshold(r.percentage_of_baseline);
    return r;
}

}  // namespace qmetric
