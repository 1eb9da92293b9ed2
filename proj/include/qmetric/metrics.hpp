#pragma once

#include <cstddef>
#include <span>

#include "qmetric/rational.hpp"
#include "qmetric/segmenter.hpp"

namespace qmetric {

/// Five user-judged attributes, each 0, 1 or 2.
struct QualityAttributes {
    int security = 1;
    int execution_time = 1;
    int user_friendliness = 1;
    int other_metrics = 1;
    int environment_selection = 1;

    friend bool operator==(const QualityAttributes&, const QualityAttributes&) = default;
};

/// Sum of the five scores in [0, 10]. Raises Error{AttributeOutOfRange}.
int quality_quotient(const QualityAttributes& attrs);

class ExecutionTimeModel {
public:
    enum class Mode { TotalSeconds, PerSegmentAverage };

    /// Both raise Error{NonPositiveTime} for seconds <= 0.
    static ExecutionTimeModel total(const Rational& seconds);
    static ExecutionTimeModel per_segment_average(const Rational& seconds);

    Mode mode() const { return mode_; }
    const Rational& seconds() const { return seconds_; }

private:
    ExecutionTimeModel(Mode m, Rational s) : mode_(m), seconds_(std::move(s)) {}
    Mode mode_;
    Rational seconds_;
};

/// Total seconds; N * average in per-segment mode (Error{ZeroSegments} if N == 0).
Rational execution_time(const ExecutionTimeModel& model, std::size_t segment_count);

/// Sum of segment impacts.
Rational code_area(std::span<const CodeSegment> segments);

/// (code_area / time) * qr. Raises Error{NonPositiveTime}.
Rational efficiency(const Rational& code_area, const Rational& time_s, int qr);

/// Efficiency relative to 100000 LOC at quality 7.5, in percent. The baseline
/// runs for the same time, so time cancels: 100 * area * qr / 750000.
Rational baseline_percentage(const Rational& code_area, int qr);

inline const Rational kThresholdPercent = 75;

inline bool meets_threshold(const Rational& percentage) { return percentage >= kThresholdPercent; }

struct EfficiencyResult {
    Rational code_area;
    Rational execution_time_s;
    int qr = 0;
    Rational efficiency;
    Rational percentage_of_baseline;
    bool meets_threshold = false;
};

EfficiencyResult evaluate(const Rational& code_area, const Rational& time_s, int qr);

}  // namespace qmetric
