#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fieldstudy/service/ingestion_service.hpp"
#include "fieldstudy/sim/scenario.hpp"
#include "fieldstudy/sim/transports.hpp"

namespace fieldstudy {

struct RunOptions {
  // Route device traffic through the HTTP API on a loopback port instead of
  // calling the service directly.
  bool loopback_http = false;
  // Keep every generated record in SimulationResult::ledger.
  bool keep_ledger = false;
  // After the horizon, bring every device online under WIFI and flush
  // until all queues are empty.
  bool final_drain = true;
  // Overrides the scenario's output directory.
  std::optional<std::filesystem::path> output_dir;
};

struct ServerRestartCheck {
  EpochMs at_ms = 0;
  bool stats_equal = false;
  bool tasks_equal = false;
  // Re-ingest of the last transmitted batch after the restart.
  std::optional<IngestStatus> inflight_status;
  bool inflight_consistent = true;
};

struct SimulationResult {
  Json summary;
  std::string ledger_sha256;
  std::size_t ledger_records = 0;
  std::vector<Record> ledger;
  std::vector<Transmission> trace;
  std::vector<ServerRestartCheck> server_restarts;

  std::size_t stored_at_horizon = 0;
  std::size_t queued_at_horizon = 0;
  std::size_t queued_not_stored_at_horizon = 0;
  bool no_loss_at_horizon = false;
  std::size_t stored_after_drain = 0;
  bool exact_after_drain = false;
  std::size_t wifi_gate_violations = 0;

  // The server as it stands at the end of the run.
  std::unique_ptr<IngestionService> service;
};

// Drives every device and the server over the scenario horizon on a shared
// logical clock. Steps happen every upload_interval_ms after t0 and at each
// fault instant; at a step a device samples up to the step time, acts out
// its participant behaviour and flushes under its current connectivity.
//
// With an output directory the run writes ledger.ndjson (every generated
// record, in generation order), transmissions.ndjson, summary.json, the
// server store under store/ and crash snapshots under snapshots/. Existing
// store/ and snapshots/ directories there are replaced.
SimulationResult run_scenario(const ScenarioSpec& spec, const RunOptions& options = {});

}  // namespace fieldstudy
