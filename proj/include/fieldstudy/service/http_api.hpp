#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "fieldstudy/core/error.hpp"
#include "fieldstudy/service/ingestion_service.hpp"

namespace fieldstudy {

// Live endpoints use the wall clock. Simulated endpoints take the logical
// time from a `now_ms` query parameter or body field and reject requests
// without one.
enum class ClockMode { Live, Simulated };
std::string_view to_string(ClockMode mode);
std::optional<ClockMode> parse_clock_mode(std::string_view name);

// HTTP status for an error code: 400 for malformed or invalid input, 404
// for unknown entities, 409 for state conflicts, 500 otherwise.
int http_status_for(Errc code);

// The service's HTTP+JSON API:
//
//   POST /v1/installations
//   POST /v1/batches
//   GET  /v1/installations/{id}/tasks
//   POST /v1/installations/{id}/tasks/{task_id}/transition
//   GET  /v1/config/{study_id}
//   GET  /v1/stats
//   GET  /v1/metrics/daily?from=YYYY-MM-DD&to=YYYY-MM-DD
//   GET  /v1/metrics/liveness?now_ms&stalled_after_ms&lost_after_ms
//   GET  /v1/metrics/gaps?installation_id&kind&from_ms&to_ms
//   GET  /v1/correlations?installation_id&from_ms&to_ms&context_window_ms
//   GET  /v1/admin/tasks
//   POST /v1/admin/tasks
//   POST /v1/admin/tasks/{id}/reschedule
//
// Errors are answered with {"code": ..., "message": ...}.
class HttpApi {
 public:
  HttpApi(IngestionService& service, ClockMode mode);
  ~HttpApi();
  HttpApi(const HttpApi&) = delete;
  HttpApi& operator=(const HttpApi&) = delete;

  // Port 0 picks a free port. Returns the bound port; throws
  // StudyError(bind_error).
  int bind(const std::string& host, int port);
  // Serves until stop(). Requires a prior bind().
  void run();
  // Serves on a background thread.
  void start();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace fieldstudy
