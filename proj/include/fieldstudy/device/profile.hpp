#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fieldstudy/core/codec.hpp"
#include "fieldstudy/core/ids.hpp"
#include "fieldstudy/core/time.hpp"
#include "fieldstudy/core/validation.hpp"

namespace fieldstudy {

enum class Connectivity { Wifi, Cellular, Offline };
std::string_view to_string(Connectivity mode);
std::optional<Connectivity> parse_connectivity(std::string_view name);

// [start_ms, end_ms) spent in `mode`.
struct ConnectivityInterval {
  EpochMs start_ms = 0;
  EpochMs end_ms = 0;
  Connectivity mode = Connectivity::Wifi;
  friend bool operator==(const ConnectivityInterval&, const ConnectivityInterval&) = default;
};

// Parameters of the synthetic GPS walk.
struct MovementModel {
  double start_lat_deg = 48.2082;
  double start_lon_deg = 16.3738;
  double max_step_m = 50.0;
  friend bool operator==(const MovementModel&, const MovementModel&) = default;
};

// Parameters of the synthetic participant. Probabilities apply once per
// scenario step.
struct BehaviorModel {
  double free_query_probability = 0.15;
  double bookmark_probability = 0.5;
  double task_start_probability = 0.7;
  double scroll_probability = 0.4;
  int queries_per_task = 2;
  std::vector<std::string> apps = {"com.android.chrome", "com.whatsapp", "com.spotify.music",
                                   "com.google.android.gm", "org.fieldstudy.app"};
  // Relative weight of each app in usage statistics and events.
  std::vector<double> app_weights = {5, 4, 3, 2, 1};
  std::vector<std::string> query_pool = {"recipe for dinner",     "weather tomorrow",
                                         "bus timetable",         "cheap flights to rome",
                                         "how to fix a bike chain", "opening hours pharmacy",
                                         "football results",      "movie showtimes"};
  friend bool operator==(const BehaviorModel&, const BehaviorModel&) = default;
};

struct DeviceProfile {
  InstallationId installation_id;
  std::uint64_t seed = 0;
  // Sorted and non-overlapping. Time outside every interval is WIFI.
  std::vector<ConnectivityInterval> connectivity_schedule;
  MovementModel movement;
  BehaviorModel behavior;

  Connectivity connectivity_at(EpochMs t) const;

  friend bool operator==(const DeviceProfile&, const DeviceProfile&) = default;
};

ValidationResult validate_profile(const DeviceProfile& profile);

Json profile_to_json(const DeviceProfile& profile);
// Missing movement/behavior fields keep their defaults. Throws
// StudyError(parse_error) on malformed input.
DeviceProfile profile_from_json(const Json& object);

}  // namespace fieldstudy
