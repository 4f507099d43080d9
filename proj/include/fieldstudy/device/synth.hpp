#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>

#include "fieldstudy/core/codec.hpp"
#include "fieldstudy/core/records.hpp"
#include "fieldstudy/device/profile.hpp"

namespace fieldstudy {

// Portable draws: std::uniform_*_distribution differ between standard
// libraries, these only depend on the engine's output.
double unit_interval(std::mt19937_64& rng);
std::size_t pick_index(std::mt19937_64& rng, std::size_t n);
std::size_t pick_weighted(std::mt19937_64& rng, std::span<const double> weights);

// Great-circle distance in metres.
double haversine_m(double lat1_deg, double lon1_deg, double lat2_deg, double lon2_deg);

// Synthetic sensor readings. The GPS walk and the battery level carry state
// between samples; everything else is drawn fresh from the device's engine.
class SensorSynth {
 public:
  SensorSynth(const DeviceProfile& profile);

  SensorPayload sample(SensorKind kind, EpochMs t, std::int64_t usage_interval_ms,
                       Connectivity mode, std::mt19937_64& rng);

  double lat() const { return lat_; }
  double lon() const { return lon_; }
  double battery() const { return battery_; }

  Json state_to_json() const;
  void restore(const Json& state);

 private:
  GpsFix step(std::mt19937_64& rng);

  MovementModel movement_;
  BehaviorModel behavior_;
  std::string home_ssid_hash_;
  std::string work_ssid_hash_;
  double lat_;
  double lon_;
  double battery_ = 100.0;
  bool charging_ = false;
};

}  // namespace fieldstudy
