#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "fieldstudy/core/ids.hpp"
#include "fieldstudy/core/time.hpp"

namespace fieldstudy {

// Sensor and phone-state kinds sampled by the background collectors.
enum class SensorKind : std::uint8_t {
  Gps,
  Accelerometer,
  Gyroscope,
  AmbientLight,
  Wifi,
  Cellular,
  Battery,
  ScreenEvent,
  AppUsageStats,
  AppUsageEvent,
};

inline constexpr std::array<SensorKind, 10> kAllSensorKinds = {
    SensorKind::Gps,         SensorKind::Accelerometer, SensorKind::Gyroscope,
    SensorKind::AmbientLight, SensorKind::Wifi,         SensorKind::Cellular,
    SensorKind::Battery,     SensorKind::ScreenEvent,   SensorKind::AppUsageStats,
    SensorKind::AppUsageEvent,
};

std::string_view to_string(SensorKind kind);
std::optional<SensorKind> parse_sensor_kind(std::string_view name);

enum class AppEvent : std::uint8_t { Launch, Interact, Close, Install, Uninstall };
std::string_view to_string(AppEvent event);
std::optional<AppEvent> parse_app_event(std::string_view name);

enum class InteractionAction : std::uint8_t { Tap, Scroll };
std::string_view to_string(InteractionAction action);
std::optional<InteractionAction> parse_interaction_action(std::string_view name);

enum class QuestionnairePhase : std::uint8_t { OnboardingSurvey, PreTask, PostTask };
std::string_view to_string(QuestionnairePhase phase);
std::optional<QuestionnairePhase> parse_questionnaire_phase(std::string_view name);

// Cellular network-type tags accepted in CELLULAR payloads.
inline constexpr std::array<std::string_view, 5> kCellularNetworkTypes = {"2G", "3G", "4G", "5G",
                                                                          "UNKNOWN"};

// --- payloads --------------------------------------------------------------

struct GpsFix {
  double lat_deg = 0;
  double lon_deg = 0;
  double accuracy_m = 0;
  friend bool operator==(const GpsFix&, const GpsFix&) = default;
};

// Accelerometer (m/s^2) and gyroscope (rad/s) share one shape.
struct MotionSample {
  double x = 0;
  double y = 0;
  double z = 0;
  friend bool operator==(const MotionSample&, const MotionSample&) = default;
};

struct LightSample {
  double lux = 0;
  friend bool operator==(const LightSample&, const LightSample&) = default;
};

struct WifiSample {
  std::string ssid_hash;
  bool connected = false;
  friend bool operator==(const WifiSample&, const WifiSample&) = default;
};

struct CellularSample {
  std::string network_type;
  std::int64_t signal_level = 0;
  friend bool operator==(const CellularSample&, const CellularSample&) = default;
};

struct BatterySample {
  double percent = 0;
  friend bool operator==(const BatterySample&, const BatterySample&) = default;
};

struct ScreenSample {
  bool on = false;
  friend bool operator==(const ScreenSample&, const ScreenSample&) = default;
};

// Foreground milliseconds per app over the trailing 24 h.
struct UsageStatsSample {
  std::map<std::string, std::int64_t> foreground_ms;
  friend bool operator==(const UsageStatsSample&, const UsageStatsSample&) = default;
};

struct UsageEventSample {
  std::string app;
  AppEvent event = AppEvent::Launch;
  friend bool operator==(const UsageEventSample&, const UsageEventSample&) = default;
};

using SensorPayload = std::variant<GpsFix, MotionSample, LightSample, WifiSample, CellularSample,
                                   BatterySample, ScreenSample, UsageStatsSample, UsageEventSample>;

// Index into SensorPayload that a kind's payload must use.
std::size_t payload_index_for(SensorKind kind);

// --- records ---------------------------------------------------------------

struct SensorRecord {
  RecordId record_id;
  InstallationId installation_id;
  EpochMs t_ms = 0;
  SensorKind kind = SensorKind::Gps;
  SensorPayload payload;
  friend bool operator==(const SensorRecord&, const SensorRecord&) = default;
};

struct InteractionRecord {
  RecordId record_id;
  InstallationId installation_id;
  EpochMs t_ms = 0;
  InteractionAction action = InteractionAction::Tap;
  std::string screen;
  std::map<std::string, std::string> detail;
  friend bool operator==(const InteractionRecord&, const InteractionRecord&) = default;
};

struct QueryRecord {
  RecordId record_id;
  InstallationId installation_id;
  EpochMs t_ms = 0;
  std::optional<std::string> task_id;
  std::string query_text;
  std::int64_t result_count = 0;
  friend bool operator==(const QueryRecord&, const QueryRecord&) = default;
};

struct BookmarkRecord {
  RecordId record_id;
  InstallationId installation_id;
  EpochMs t_ms = 0;
  std::optional<std::string> task_id;
  std::string url;
  RecordId source_query_record;
  friend bool operator==(const BookmarkRecord&, const BookmarkRecord&) = default;
};

struct QuestionnaireRecord {
  RecordId record_id;
  InstallationId installation_id;
  EpochMs t_ms = 0;
  std::optional<std::string> task_id;
  QuestionnairePhase phase = QuestionnairePhase::PostTask;
  std::string url;
  bool completed = false;
  friend bool operator==(const QuestionnaireRecord&, const QuestionnaireRecord&) = default;
};

using Record =
    std::variant<SensorRecord, InteractionRecord, QueryRecord, BookmarkRecord, QuestionnaireRecord>;

const RecordId& record_id_of(const Record& r);
const InstallationId& installation_of(const Record& r);
EpochMs timestamp_of(const Record& r);

// Sensor kind name for sensor records; INTERACTION, QUERY, BOOKMARK or
// QUESTIONNAIRE otherwise. Used as the key of per-kind statistics.
std::string_view record_kind_name(const Record& r);

// True for sensor records whose kind matches.
bool is_sensor_kind(const Record& r, SensorKind kind);

// Ordering used by every read path: t_ms, then record_id.
inline bool time_then_id_less(const Record& a, const Record& b) {
  const auto ta = timestamp_of(a);
  const auto tb = timestamp_of(b);
  if (ta != tb) return ta < tb;
  return record_id_of(a) < record_id_of(b);
}

// Unit of upload: one installation's buffered records under a batch
// sequence number that is the idempotency key on the server.
struct EventBatch {
  InstallationId installation_id;
  std::uint64_t batch_seq = 0;
  EpochMs created_ms = 0;
  std::vector<Record> records;
  friend bool operator==(const EventBatch&, const EventBatch&) = default;
};

}  // namespace fieldstudy
