#pragma once

#include <deque>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fieldstudy/config/study_config.hpp"
#include "fieldstudy/core/protocol.hpp"
#include "fieldstudy/core/records.hpp"
#include "fieldstudy/device/profile.hpp"
#include "fieldstudy/device/search.hpp"
#include "fieldstudy/device/synth.hpp"
#include "fieldstudy/device/transport.hpp"

namespace fieldstudy {

// The task a participant is working on.
struct ActiveTask {
  std::string task_id;
  std::string post_questionnaire_url;
  int queries_done = 0;
  // Created on the first completion attempt and reused on retries.
  std::optional<QuestionnaireRecord> post_questionnaire;
  friend bool operator==(const ActiveTask&, const ActiveTask&) = default;
};

struct FlushResult {
  std::vector<std::uint64_t> acked;
  std::size_t records_acked = 0;
  std::size_t transmissions = 0;
  std::size_t duplicate_acks = 0;
  std::size_t lost_after_send = 0;
  // Stopped early on a transport failure.
  bool interrupted = false;
};

// A simulated phone running the study app.
//
// Collectors sample at t0 + k * rate for k >= 1. Generated records join the
// pending queue; flush seals them into batches of at most kMaxBatchRecords
// and drops them only once the server acks. A batch whose transmission may
// have reached the server moves to the outbox and is re-sent verbatim, with
// the same sequence number, until it is acked.
//
// crash() captures the complete device state; restart() restores it
// exactly. Nothing in here reads the wall clock.
class VirtualDevice {
 public:
  static constexpr std::size_t kMaxBatchRecords = 500;

  static VirtualDevice spawn(DeviceProfile profile, StudyConfig cfg, EpochMs t0);

  // Throws StudyError(corrupt_snapshot) for anything but an intact
  // snapshot, and invalid_config when `cfg` enables other collectors than
  // the snapshot was taken with.
  static VirtualDevice restart(std::string_view snapshot, StudyConfig cfg);
  static VirtualDevice restart_from_file(const std::filesystem::path& path, StudyConfig cfg);

  std::string crash() const;
  void write_snapshot(const std::filesystem::path& path) const;

  // Called with every record the device generates, in generation order.
  // Not part of the persisted state.
  void set_observer(std::function<void(const Record&)> observer) { observer_ = std::move(observer); }

  // Generates every due sample up to and including until_ms.
  std::vector<Record> tick(EpochMs until_ms);
  // Powers the device back on at `t` after downtime: due instants before
  // `t` are skipped, the anchor stays at t0.
  void resume_at(EpochMs t);

  FlushResult flush(Connectivity mode, Transport& transport);

  InteractionRecord record_interaction(InteractionAction action, std::string screen,
                                       std::map<std::string, std::string> detail = {});
  // Requires onboarding DEMO_TASK or READY. Carries the active task's id.
  std::pair<QueryRecord, std::vector<SearchResult>> submit_query(std::string query_text,
                                                                 SearchProvider& search);
  // The query must be one this device submitted.
  BookmarkRecord bookmark_result(const RecordId& query_record_id, std::string url);
  QuestionnaireRecord record_questionnaire(QuestionnairePhase phase,
                                           std::optional<std::string> task_id, std::string url,
                                           bool completed);

  // Performs the step that finishes the current onboarding stage: the
  // tutorial, the demo task (one query) or the onboarding survey.
  void advance_onboarding(SearchProvider& search);

  TaskAssignmentState start_task(Transport& transport, const TaskView& view);
  // Sends COMPLETE with the post-task questionnaire (queued once).
  TaskAssignmentState complete_task(Transport& transport);
  void abandon_task() { active_task_.reset(); }

  const DeviceProfile& profile() const { return profile_; }
  const InstallationId& id() const { return profile_.installation_id; }
  const StudyConfig& config() const { return cfg_; }
  EpochMs clock() const { return clock_; }
  EpochMs t0() const { return t0_; }
  std::uint64_t next_batch_seq() const { return next_batch_seq_; }
  const std::map<SensorKind, EpochMs>& next_due() const { return next_due_; }
  OnboardingStage onboarding_stage() const { return onboarding_; }
  const std::optional<ActiveTask>& active_task() const { return active_task_; }
  const std::vector<Record>& pending() const { return pending_; }
  const std::deque<EventBatch>& outbox() const { return outbox_; }
  // Records not yet acked: pending plus sealed in the outbox.
  std::size_t queued_records() const;
  std::mt19937_64& rng() { return rng_; }
  const SensorSynth& synth() const { return synth_; }

  // Equal persisted state (observer excluded).
  bool same_state(const VirtualDevice& other) const;

 private:
  VirtualDevice(DeviceProfile profile, StudyConfig cfg);

  RecordId next_record_id() { return RecordId::random_v4(rng_); }
  void enqueue(Record record);
  bool gated(const Record& r) const;
  bool sendable(const EventBatch& batch, Connectivity mode) const;

  DeviceProfile profile_;
  StudyConfig cfg_;
  SensorSynth synth_;
  std::mt19937_64 rng_;
  EpochMs t0_ = 0;
  EpochMs clock_ = 0;
  std::uint64_t next_batch_seq_ = 1;
  std::map<SensorKind, EpochMs> next_due_;
  OnboardingStage onboarding_ = OnboardingStage::Tutorial;
  std::optional<ActiveTask> active_task_;
  std::set<RecordId> own_queries_;
  std::vector<Record> pending_;
  std::deque<EventBatch> outbox_;
  std::function<void(const Record&)> observer_;
};

}  // namespace fieldstudy
