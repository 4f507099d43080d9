#pragma once

#include <filesystem>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "fieldstudy/analytics/analytics.hpp"
#include "fieldstudy/config/study_config.hpp"
#include "fieldstudy/core/protocol.hpp"
#include "fieldstudy/scheduler/task_scheduler.hpp"
#include "fieldstudy/store/event_store.hpp"

namespace fieldstudy {

// Earliest and latest record timestamps in the store.
struct TimeExtent {
  EpochMs first_ms = 0;
  EpochMs last_ms = 0;
};

// The server side of a study: idempotent batch ingestion, task sync for
// devices, task administration and read access for the dashboard.
//
// Every method takes the logical time explicitly; the HTTP layer decides
// whether that is the wall clock or a time supplied by the caller.
//
// Thread-safe. Writers are serialized; readers share a lock and only observe
// fully committed batches.
class IngestionService {
 public:
  // Memory-only service.
  explicit IngestionService(StudyConfig cfg);
  // Persists under `store_dir` and reloads whatever is already there: the
  // event store, the task journal (_meta/tasks.ndjson) and a copy of the
  // configuration (_meta/study.conf).
  IngestionService(StudyConfig cfg, const std::filesystem::path& store_dir);

  const StudyConfig& config() const { return cfg_; }

  RegistrationReceipt register_installation(const InstallationId& id, const std::string& study_id,
                                            EpochMs now);

  // Validates the whole batch before touching the store, so an invalid
  // record rejects the batch with nothing stored. Stored onboarding reports
  // (interaction on screen "onboarding" with detail step=tutorial_done or
  // demo_task_done, completed ONBOARDING_SURVEY questionnaire) advance the
  // installation's onboarding stage.
  IngestAck ingest_batch(const EventBatch& batch, EpochMs now);

  std::vector<Record> read_range(const InstallationId& id, EpochMs from_ms, EpochMs to_ms,
                                 const KindFilter& kinds = std::nullopt) const;

  // Expires overdue assignments, notifies due ones, then lists the
  // installation's open tasks with its onboarding stage.
  SyncResponse sync_tasks(const InstallationId& id, EpochMs now);

  TaskAssignmentState transition_task(const InstallationId& id, const std::string& task_id,
                                      TransitionVerb verb,
                                      const std::optional<QuestionnaireRecord>& questionnaire,
                                      EpochMs now);

  StoreStats store_stats() const;

  // Missing questionnaire URLs are filled from the configuration defaults.
  std::string add_task(Task task, EpochMs now);
  TaskAssignmentState reschedule_task(const InstallationId& id, const std::string& task_id,
                                      TimeWindow window, EpochMs now);
  // Runs expiry and notification for every installation.
  void advance_clock(EpochMs now);

  std::vector<TaskAssignmentState> assignments() const;
  std::optional<TimeExtent> time_extent() const;

  std::map<UtcDate, analytics::DailyPoint> daily_series(UtcDate from, UtcDate to) const;
  std::vector<analytics::CorrelationRow> correlations(
      const std::optional<InstallationId>& installation, EpochMs from_ms, EpochMs to_ms,
      EpochMs context_window_ms) const;
  std::vector<analytics::LivenessReport> liveness(EpochMs now, EpochMs stalled_after_ms,
                                                  EpochMs lost_after_ms) const;
  std::vector<analytics::Gap> gaps(const InstallationId& id, SensorKind kind, EpochMs from_ms,
                                   EpochMs to_ms) const;
  std::vector<analytics::ZeroBookmarkCompletion> zero_bookmark_completions() const;

  // Direct read access for tests and reports. The callback runs under the
  // shared lock.
  template <typename F>
  auto with_store(F&& f) const {
    std::shared_lock lock(mutex_);
    return f(store_, scheduler_);
  }

 private:
  void apply_onboarding_reports(const EventBatch& batch);

  StudyConfig cfg_;
  mutable std::shared_mutex mutex_;
  EventStore store_;
  TaskScheduler scheduler_;
};

}  // namespace fieldstudy
