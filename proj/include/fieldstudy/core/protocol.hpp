#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fieldstudy/core/codec.hpp"
#include "fieldstudy/core/task.hpp"

namespace fieldstudy {

// Messages exchanged between devices and the ingestion service.

struct RegistrationReceipt {
  InstallationId installation_id;
  std::string study_id;
  EpochMs registered_ms = 0;
  friend bool operator==(const RegistrationReceipt&, const RegistrationReceipt&) = default;
};

enum class IngestStatus { Stored, Duplicate };
std::string_view to_string(IngestStatus status);

struct IngestAck {
  IngestStatus status = IngestStatus::Stored;
  std::uint64_t batch_seq = 0;
  // Records newly appended; smaller than the batch when some record ids
  // were already stored.
  std::size_t records_stored = 0;
  friend bool operator==(const IngestAck&, const IngestAck&) = default;
};

struct TaskView {
  Task task;
  TaskAssignmentState assignment;
  friend bool operator==(const TaskView&, const TaskView&) = default;
};

struct SyncResponse {
  OnboardingStage onboarding_stage = OnboardingStage::Tutorial;
  std::vector<TaskView> tasks;
  friend bool operator==(const SyncResponse&, const SyncResponse&) = default;
};

enum class TransitionVerb { Start, Complete };
std::string_view to_string(TransitionVerb verb);
std::optional<TransitionVerb> parse_transition_verb(std::string_view name);

Json receipt_to_json(const RegistrationReceipt& r);
RegistrationReceipt receipt_from_json(const Json& j);
Json ack_to_json(const IngestAck& ack);
IngestAck ack_from_json(const Json& j);
Json sync_to_json(const SyncResponse& s);
SyncResponse sync_from_json(const Json& j);

}  // namespace fieldstudy
