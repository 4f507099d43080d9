#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "fieldstudy/analytics/analytics.hpp"

namespace fieldstudy::analytics {

inline constexpr std::array<std::string_view, 4> kReportNames = {"daily", "liveness",
                                                                 "correlations", "gaps"};

// Inputs for render_report. Unset bounds fall back to the store's content,
// never to the wall clock, so a report over the same store is always the
// same bytes.
struct ReportParams {
  // daily: first and last day. Default: first and last day holding data.
  std::optional<UtcDate> from_date;
  std::optional<UtcDate> to_date;
  // correlations and gaps: [from_ms, to_ms). Default: everything.
  std::optional<EpochMs> from_ms;
  std::optional<EpochMs> to_ms;
  // liveness: evaluation time. Default: the newest record in the store.
  std::optional<EpochMs> now_ms;
  EpochMs stalled_after_ms = kDefaultStalledAfterMs;
  EpochMs lost_after_ms = kDefaultLostAfterMs;
  EpochMs context_window_ms = kDefaultContextWindowMs;
  // correlations and gaps: restrict to one installation.
  std::optional<InstallationId> installation;
  // gaps: restrict to one kind. Default: every enabled collector.
  std::optional<SensorKind> kind;
};

// RFC 4180 field quoting.
std::string csv_field(std::string_view value);

std::string daily_csv(const std::map<UtcDate, DailyPoint>& series);
std::string liveness_csv(const std::vector<LivenessReport>& reports);
std::string correlations_csv(const std::vector<CorrelationRow>& rows);
std::string gaps_csv(const std::vector<std::pair<std::pair<InstallationId, SensorKind>, Gap>>& gaps);

// Renders one named report as CSV with a header line. Throws
// StudyError(unknown_report) listing the valid names.
std::string render_report(std::string_view name, const EventStore& store, const StudyConfig& cfg,
                          const ReportParams& params);

}  // namespace fieldstudy::analytics
