#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "fieldstudy/config/study_config.hpp"
#include "fieldstudy/device/profile.hpp"
#include "fieldstudy/device/transport.hpp"
#include "fieldstudy/service/ingestion_service.hpp"

namespace fieldstudy {

// Calls the service directly. A null service behaves like an unreachable
// server.
class InProcessTransport : public Transport {
 public:
  explicit InProcessTransport(IngestionService* service = nullptr) : service_(service) {}
  void set_service(IngestionService* service) { service_ = service; }

  RegistrationReceipt register_installation(const InstallationId& id, const std::string& study_id,
                                            EpochMs now) override;
  SendResult send_batch(const EventBatch& batch, EpochMs now) override;
  SyncResponse sync_tasks(const InstallationId& id, EpochMs now) override;
  TaskAssignmentState transition(const InstallationId& id, const std::string& task_id,
                                 TransitionVerb verb,
                                 const std::optional<QuestionnaireRecord>& questionnaire,
                                 EpochMs now) override;

 private:
  IngestionService& require();
  IngestionService* service_;
};

// Talks to the HTTP API. Every request carries `now_ms`, so the server
// must run in simulated clock mode or ignores it in live mode.
class HttpTransport : public Transport {
 public:
  HttpTransport(std::string host, int port);
  ~HttpTransport() override;
  void set_port(int port);
  // Closes the kept-alive connection so the server can shut down promptly.
  void disconnect();

  RegistrationReceipt register_installation(const InstallationId& id, const std::string& study_id,
                                            EpochMs now) override;
  SendResult send_batch(const EventBatch& batch, EpochMs now) override;
  SyncResponse sync_tasks(const InstallationId& id, EpochMs now) override;
  TaskAssignmentState transition(const InstallationId& id, const std::string& task_id,
                                 TransitionVerb verb,
                                 const std::optional<QuestionnaireRecord>& questionnaire,
                                 EpochMs now) override;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

struct FaultRates {
  // Probability that an acked batch also reaches the server a second time.
  double duplicate_rate = 0.0;
  // Probability that an ack is lost after the server stored the batch.
  double ack_loss_rate = 0.0;
};

struct FaultCounters {
  std::uint64_t duplicates_injected = 0;
  std::uint64_t acks_dropped = 0;
};

// Network faults between devices and the server. Only batch uploads are
// affected.
class FaultInjectingTransport : public Transport {
 public:
  FaultInjectingTransport(Transport& inner, FaultRates rates, std::uint64_t seed)
      : inner_(inner), rates_(rates), rng_(seed) {}

  const FaultCounters& counters() const { return counters_; }

  RegistrationReceipt register_installation(const InstallationId& id, const std::string& study_id,
                                            EpochMs now) override {
    return inner_.register_installation(id, study_id, now);
  }
  SendResult send_batch(const EventBatch& batch, EpochMs now) override;
  SyncResponse sync_tasks(const InstallationId& id, EpochMs now) override {
    return inner_.sync_tasks(id, now);
  }
  TaskAssignmentState transition(const InstallationId& id, const std::string& task_id,
                                 TransitionVerb verb,
                                 const std::optional<QuestionnaireRecord>& questionnaire,
                                 EpochMs now) override {
    return inner_.transition(id, task_id, verb, questionnaire, now);
  }

 private:
  Transport& inner_;
  FaultRates rates_;
  std::mt19937_64 rng_;
  FaultCounters counters_;
};

// One upload attempt as seen on the device's side of the network.
struct Transmission {
  InstallationId installation_id;
  std::uint64_t batch_seq = 0;
  EpochMs t_ms = 0;
  Connectivity mode = Connectivity::Wifi;
  std::size_t records = 0;
  std::size_t wifi_only_records = 0;
  SendOutcome outcome = SendOutcome::NotSent;
};

Json transmission_to_json(const Transmission& t);

// Records every batch upload together with the connectivity the caller
// declares before flushing.
class TracingTransport : public Transport {
 public:
  TracingTransport(Transport& inner, const StudyConfig& cfg) : inner_(inner), cfg_(cfg) {}

  void set_mode(Connectivity mode) { mode_ = mode; }
  const std::vector<Transmission>& trace() const { return trace_; }
  const EventBatch* last_batch() const { return last_batch_ ? &*last_batch_ : nullptr; }

  RegistrationReceipt register_installation(const InstallationId& id, const std::string& study_id,
                                            EpochMs now) override {
    return inner_.register_installation(id, study_id, now);
  }
  SendResult send_batch(const EventBatch& batch, EpochMs now) override;
  SyncResponse sync_tasks(const InstallationId& id, EpochMs now) override {
    return inner_.sync_tasks(id, now);
  }
  TaskAssignmentState transition(const InstallationId& id, const std::string& task_id,
                                 TransitionVerb verb,
                                 const std::optional<QuestionnaireRecord>& questionnaire,
                                 EpochMs now) override {
    return inner_.transition(id, task_id, verb, questionnaire, now);
  }

 private:
  Transport& inner_;
  const StudyConfig& cfg_;
  Connectivity mode_ = Connectivity::Wifi;
  std::vector<Transmission> trace_;
  std::optional<EventBatch> last_batch_;
};

}  // namespace fieldstudy
