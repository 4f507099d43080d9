#pragma once

#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "fieldstudy/core/protocol.hpp"
#include "fieldstudy/core/records.hpp"
#include "fieldstudy/core/task.hpp"

namespace fieldstudy {

struct AssignmentKey {
  InstallationId installation_id;
  std::string task_id;
  friend auto operator<=>(const AssignmentKey&, const AssignmentKey&) = default;
};

enum class OnboardingEvent { TutorialDone, DemoTaskDone, SurveyDone };
std::string_view to_string(OnboardingEvent event);
std::optional<OnboardingEvent> parse_onboarding_event(std::string_view name);

// Owns tasks, per-installation assignments and onboarding progress.
//
// Windows are [start, end). Every mutation is appended to an optional
// JSON-lines journal as the resulting state change, and `replay` rebuilds an
// identical store from it. Transition timestamps within one assignment are
// strictly increasing: a transition requested at or before the previous
// entry is stamped one millisecond after it.
//
// Not thread-safe; callers serialize writers.
class TaskScheduler {
 public:
  TaskScheduler() = default;
  explicit TaskScheduler(std::filesystem::path journal_path);

  // Reads a journal written by a previous instance and keeps appending to it.
  // Throws StudyError(corrupt_store) on unreadable entries other than a torn
  // final line.
  static TaskScheduler replay(const std::filesystem::path& journal_path);

  // Idempotent. Throws invalid_argument for a malformed id.
  void register_installation(const InstallationId& id);
  bool is_registered(const InstallationId& id) const { return onboarding_.contains(id); }
  std::vector<InstallationId> installations() const;

  std::string add_task(const Task& task, EpochMs now);
  std::vector<AssignmentKey> due_notifications(EpochMs now);
  TaskAssignmentState start_task(const InstallationId& id, const std::string& task_id,
                                 EpochMs now);
  TaskAssignmentState complete_task(const InstallationId& id, const std::string& task_id,
                                    EpochMs now, const QuestionnaireRecord& post_questionnaire);
  std::vector<AssignmentKey> expire_tasks(EpochMs now);
  TaskAssignmentState reschedule_task(const InstallationId& id, const std::string& task_id,
                                      TimeWindow new_window, EpochMs now);
  std::vector<TaskView> tasks_for(const InstallationId& id, EpochMs now) const;

  OnboardingStage onboarding_state(const InstallationId& id) const;
  // Reports are remembered; the stage advances through TUTORIAL, DEMO_TASK,
  // SURVEY, READY one step at a time, and only while the report completing
  // the current stage has been received. A survey reported during the
  // tutorial therefore never skips the demo task.
  OnboardingStage report_onboarding(const InstallationId& id, OnboardingEvent event);

  const std::map<std::string, Task>& tasks() const { return tasks_; }
  // Current assignment per (installation, task).
  const TaskAssignmentState& assignment(const InstallationId& id, const std::string& task_id) const;
  // All attempts, oldest first.
  const std::vector<TaskAssignmentState>& history(const InstallationId& id,
                                                  const std::string& task_id) const;
  const std::map<AssignmentKey, std::vector<TaskAssignmentState>>& all_assignments() const {
    return assignments_;
  }
  std::optional<QuestionnaireRecord> post_questionnaire(const InstallationId& id,
                                                        const std::string& task_id) const;

  // Same tasks, assignments, onboarding and questionnaires.
  bool same_state(const TaskScheduler& other) const;

 private:
  TaskAssignmentState& current(const InstallationId& id, const std::string& task_id);
  void append(const Json& entry);
  void apply(const Json& entry);

  std::map<std::string, Task> tasks_;
  std::map<AssignmentKey, std::vector<TaskAssignmentState>> assignments_;
  struct Onboarding {
    std::set<OnboardingEvent> reported;
    OnboardingStage stage = OnboardingStage::Tutorial;
    friend bool operator==(const Onboarding&, const Onboarding&) = default;
  };
  std::map<InstallationId, Onboarding> onboarding_;
  std::map<AssignmentKey, QuestionnaireRecord> questionnaires_;

  std::optional<std::filesystem::path> journal_path_;
  std::ofstream journal_;
};

}  // namespace fieldstudy
