#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "fieldstudy/config/study_config.hpp"
#include "fieldstudy/core/task.hpp"
#include "fieldstudy/device/profile.hpp"
#include "fieldstudy/sim/transports.hpp"

namespace fieldstudy {

struct CrashFault {
  InstallationId installation_id;
  EpochMs at_ms = 0;
  EpochMs downtime_ms = 0;
  friend bool operator==(const CrashFault&, const CrashFault&) = default;
};

// A simulated study. All times are absolute once parsed.
struct ScenarioSpec {
  std::string name = "scenario";
  StudyConfig config;
  EpochMs t0_ms = 0;
  EpochMs horizon_ms = 0;
  std::vector<DeviceProfile> devices;
  std::vector<Task> tasks;
  FaultRates faults;
  std::uint64_t fault_seed = 0;
  std::vector<CrashFault> crashes;
  std::vector<EpochMs> server_restarts;
  std::optional<std::filesystem::path> output_dir;

  EpochMs end_ms() const { return t0_ms + horizon_ms; }
};

ValidationResult validate_scenario(const ScenarioSpec& spec);

// Reads the JSON scenario format. Times inside the file (connectivity
// intervals, task windows, crash and restart instants) are offsets from
// t0_ms. Relative paths (config, output) resolve against `base_dir`.
//
//   {
//     "name": "smoke", "t0_ms": 1709510400000, "horizon_ms": 86400000,
//     "config": "study.conf",
//     "devices": [{"installation_id": "...", "seed": 1, ...}],
//     "fleet": {"count": 20, "id_prefix": "device-", "seed": 7,
//               "crashes_per_device": 3, "min_downtime_ms": ..., "max_downtime_ms": ...,
//               "mixed_connectivity": true},
//     "tasks": [{... "assigned_to": ["*"] ...}],
//     "daily_tasks": {"window_start_ms": 32400000, "window_length_ms": 28800000,
//                     "titles": ["...", ...]},
//     "faults": {"seed": 3, "duplicate_rate": 0.05, "ack_loss_rate": 0.02,
//                "crashes": [{"installation_id": "...", "at_ms": ..., "downtime_ms": ...}],
//                "server_restarts": [...]},
//     "output": "out/smoke"
//   }
//
// Throws StudyError(parse_error) for malformed files and invalid_argument
// when the result fails validate_scenario.
ScenarioSpec parse_scenario(const Json& document, const std::filesystem::path& base_dir);
ScenarioSpec load_scenario(const std::filesystem::path& path);

struct FleetSpec {
  std::size_t count = 0;
  std::string id_prefix = "device-";
  std::uint64_t seed = 0;
  int crashes_per_device = 0;
  EpochMs min_downtime_ms = 30 * kMsPerMinute;
  EpochMs max_downtime_ms = 3 * kMsPerHour;
  bool mixed_connectivity = true;
};

// Deterministic device profiles and crash schedule for a fleet. Crashes of
// one device never overlap and all end before the horizon.
void expand_fleet(const FleetSpec& fleet, ScenarioSpec& spec);

}  // namespace fieldstudy
