#pragma once

#include <optional>
#include <string>

#include "fieldstudy/core/protocol.hpp"

namespace fieldstudy {

enum class SendOutcome {
  Acked,
  // Nothing reached the server; the batch may be rebuilt freely.
  NotSent,
  // The request left the device but no ack came back. The server may or may
  // not have stored it, so the batch must be re-sent verbatim.
  LostAfterSend,
};
std::string_view to_string(SendOutcome outcome);

struct SendResult {
  SendOutcome outcome = SendOutcome::NotSent;
  std::optional<IngestAck> ack;
  std::string detail;
};

// How a device reaches the ingestion service. Server-side rejections
// surface as StudyError with the server's code; unreachable servers as
// StudyError(transport_error), except for send_batch which reports them in
// the result.
class Transport {
 public:
  virtual ~Transport() = default;

  virtual RegistrationReceipt register_installation(const InstallationId& id,
                                                    const std::string& study_id, EpochMs now) = 0;
  virtual SendResult send_batch(const EventBatch& batch, EpochMs now) = 0;
  virtual SyncResponse sync_tasks(const InstallationId& id, EpochMs now) = 0;
  virtual TaskAssignmentState transition(const InstallationId& id, const std::string& task_id,
                                         TransitionVerb verb,
                                         const std::optional<QuestionnaireRecord>& questionnaire,
                                         EpochMs now) = 0;
};

}  // namespace fieldstudy
