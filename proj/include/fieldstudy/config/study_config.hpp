#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "fieldstudy/core/codec.hpp"
#include "fieldstudy/core/records.hpp"
#include "fieldstudy/core/validation.hpp"

namespace fieldstudy {

// Study-wide collection settings.
//
// The three rates mirror the app's configuration block:
//   usage_interval_ms  app usage interval period      (1000*60*60*24)
//   location_rate_ms   sample rate location recording (1000*60*3)
//   sample_rate_ms     sample rate for everything else (1000*60*2)
// upload_interval_ms controls how often a device attempts to flush its
// queue; 10 minutes by default.
struct StudyConfig {
  std::string study_id = "study";
  std::map<SensorKind, bool> record_toggles = default_toggles();
  std::int64_t usage_interval_ms = 86'400'000;
  std::int64_t location_rate_ms = 180'000;
  std::int64_t sample_rate_ms = 120'000;
  std::int64_t upload_interval_ms = 600'000;
  std::set<SensorKind> wifi_only_kinds;
  std::string onboarding_survey_url = "https://surveys.example.org/onboarding";
  std::optional<std::string> default_pre_task_url;
  std::string default_post_task_url = "https://surveys.example.org/post-task";

  bool enabled(SensorKind kind) const;
  bool wifi_only(SensorKind kind) const { return wifi_only_kinds.contains(kind); }

  static std::map<SensorKind, bool> default_toggles();

  friend bool operator==(const StudyConfig&, const StudyConfig&) = default;
};

struct Collector {
  SensorKind kind;
  std::int64_t rate_ms;
  friend bool operator==(const Collector&, const Collector&) = default;
};

// Config key for a kind's toggle, e.g. record_gps, record_app_usage_stats.
std::string toggle_key(SensorKind kind);

// Parses the flat `key = value` format. Blank lines and lines starting with
// `#` are ignored. Throws StudyError(parse_error) with a "line N:" prefix on
// syntax errors, unknown or repeated keys and non-positive rates.
StudyConfig parse_config(std::string_view text);
StudyConfig load_config_file(const std::string& path);

// Writes every key; parse_config(emit_config(c)) == c.
std::string emit_config(const StudyConfig& cfg);

ValidationResult validate_config(const StudyConfig& cfg);

// Toggled-on kinds in kind order, each with its configured rate.
std::vector<Collector> effective_collectors(const StudyConfig& cfg);
std::int64_t collector_rate(const StudyConfig& cfg, SensorKind kind);

Json config_to_json(const StudyConfig& cfg);

}  // namespace fieldstudy
