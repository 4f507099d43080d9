#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "fieldstudy/core/codec.hpp"
#include "fieldstudy/core/ids.hpp"
#include "fieldstudy/core/time.hpp"
#include "fieldstudy/core/validation.hpp"

namespace fieldstudy {

struct Task {
  std::string task_id;
  std::string title;
  std::string description;
  TimeWindow window;
  std::set<InstallationId> assigned_to;
  std::optional<std::string> pre_questionnaire_url;
  std::string post_questionnaire_url;
  std::map<std::string, std::string> metadata;

  friend bool operator==(const Task&, const Task&) = default;
};

// Task ids appear in URL paths, so they follow the installation-id alphabet
// with a 1-64 length.
bool is_valid_task_id(std::string_view id);

ValidationResult validate_task(const Task& task);

enum class AssignmentState { Scheduled, Notified, Started, Completed, Expired, Rescheduled };

std::string_view to_string(AssignmentState state);
std::optional<AssignmentState> parse_assignment_state(std::string_view name);

// Edges of the assignment lifecycle graph.
bool is_allowed_transition(AssignmentState from, AssignmentState to);
// COMPLETED, EXPIRED (until rescheduled) and RESCHEDULED accept no further
// participant action. EXPIRED can still move to RESCHEDULED.
bool is_terminal(AssignmentState state);

struct StateChange {
  AssignmentState state = AssignmentState::Scheduled;
  EpochMs t_ms = 0;
  friend bool operator==(const StateChange&, const StateChange&) = default;
};

// One attempt of an installation at a task. Rescheduling closes the current
// attempt (RESCHEDULED) and opens a new one with its own window.
struct TaskAssignmentState {
  std::string task_id;
  InstallationId installation_id;
  AssignmentState state = AssignmentState::Scheduled;
  std::uint32_t attempt = 0;
  TimeWindow window;
  std::vector<StateChange> transition_log;
  // Per-participant metadata such as the start time.
  std::map<std::string, std::string> metadata;

  friend bool operator==(const TaskAssignmentState&, const TaskAssignmentState&) = default;
};

enum class OnboardingStage { Tutorial, DemoTask, Survey, Ready };
std::string_view to_string(OnboardingStage stage);
std::optional<OnboardingStage> parse_onboarding_stage(std::string_view name);

Json task_to_json(const Task& task);
// Throws StudyError(invalid_argument) on missing or mistyped fields. Does not
// run validate_task.
Task task_from_json(const Json& object);

Json assignment_to_json(const TaskAssignmentState& assignment);
TaskAssignmentState assignment_from_json(const Json& object);

}  // namespace fieldstudy
