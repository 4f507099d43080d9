#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fieldstudy/config/study_config.hpp"
#include "fieldstudy/core/records.hpp"
#include "fieldstudy/core/task.hpp"
#include "fieldstudy/store/event_store.hpp"

namespace fieldstudy::analytics {

inline constexpr EpochMs kDefaultContextWindowMs = 3'600'000;
inline constexpr EpochMs kDefaultStalledAfterMs = 2 * kMsPerHour;
inline constexpr EpochMs kDefaultLostAfterMs = 6 * kMsPerHour;

struct LocationContext {
  SensorRecord fix;
  EpochMs staleness_ms = 0;
  friend bool operator==(const LocationContext&, const LocationContext&) = default;
};

// One query joined with what the device recorded around it.
struct CorrelationRow {
  QueryRecord query;
  std::optional<LocationContext> location;
  std::vector<BookmarkRecord> starred;
  std::vector<SensorRecord> app_usage;
  std::optional<std::string> task_id;
  friend bool operator==(const CorrelationRow&, const CorrelationRow&) = default;
};

enum class LivenessStatus { Active, Stalled, Lost };
std::string_view to_string(LivenessStatus status);

struct LivenessReport {
  InstallationId installation_id;
  std::optional<EpochMs> last_record_ms;
  LivenessStatus status = LivenessStatus::Lost;
  std::string reason;
  friend bool operator==(const LivenessReport&, const LivenessReport&) = default;
};

struct Gap {
  EpochMs gap_start = 0;
  EpochMs gap_end = 0;
  friend bool operator==(const Gap&, const Gap&) = default;
};

struct DailyPoint {
  std::int64_t queries = 0;
  std::int64_t active_participants = 0;
  friend bool operator==(const DailyPoint&, const DailyPoint&) = default;
};

// Both dates inclusive. Throws invalid_argument when from > to.
std::map<UtcDate, std::int64_t> daily_query_counts(const EventStore& store, UtcDate from,
                                                   UtcDate to);
std::map<UtcDate, std::int64_t> daily_active_participants(const EventStore& store, UtcDate from,
                                                          UtcDate to);
std::map<UtcDate, DailyPoint> daily_series(const EventStore& store, UtcDate from, UtcDate to);

// One row per query with from_ms <= t < to_ms, ordered by (t_ms, record_id).
// The location is the last GPS fix at or before the query, if it is at most
// 2 * location_rate_ms old. App usage is every APP_USAGE_EVENT within
// context_window_ms of the query on either side.
std::vector<CorrelationRow> correlate_queries(const EventStore& store,
                                              const std::optional<InstallationId>& installation,
                                              EpochMs from_ms, EpochMs to_ms,
                                              EpochMs context_window_ms,
                                              std::int64_t location_rate_ms);

// Every registered installation, in id order. Silence shorter than
// stalled_after_ms is ACTIVE, shorter than lost_after_ms STALLED, otherwise
// LOST. Installations without records are LOST ("never reported").
std::vector<LivenessReport> liveness(const EventStore& store, EpochMs now,
                                     EpochMs stalled_after_ms, EpochMs lost_after_ms);

// Consecutive records of `kind` more than 2 * rate apart. Each gap runs from
// the first missed sampling instant (previous record + rate) to the next
// record. Throws invalid_argument when the kind is disabled.
std::vector<Gap> collection_gaps(const EventStore& store, const StudyConfig& cfg,
                                 const InstallationId& installation, SensorKind kind,
                                 EpochMs from_ms, EpochMs to_ms);

// Completed assignments whose installation bookmarked nothing for the task.
// Stand-in for "the results did not answer the task".
struct ZeroBookmarkCompletion {
  InstallationId installation_id;
  std::string task_id;
  friend bool operator==(const ZeroBookmarkCompletion&, const ZeroBookmarkCompletion&) = default;
};
std::vector<ZeroBookmarkCompletion> zero_bookmark_completions(
    const EventStore& store, const std::vector<TaskAssignmentState>& completed);

Json correlation_to_json(const CorrelationRow& row);
Json liveness_to_json(const LivenessReport& report);
Json gap_to_json(const Gap& gap);
Json zero_bookmark_to_json(const ZeroBookmarkCompletion& flag);
// {"days": [{"date", "queries", "active_participants"}, ...]} in date order.
Json daily_series_to_json(const std::map<UtcDate, DailyPoint>& series);

}  // namespace fieldstudy::analytics
