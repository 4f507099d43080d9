#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace fieldstudy {

// Milliseconds since the Unix epoch, UTC. Every timestamp in the system uses
// this unit, including the simulator's logical clock.
using EpochMs = std::int64_t;

inline constexpr EpochMs kMsPerSecond = 1000;
inline constexpr EpochMs kMsPerMinute = 60 * kMsPerSecond;
inline constexpr EpochMs kMsPerHour = 60 * kMsPerMinute;
inline constexpr EpochMs kMsPerDay = 24 * kMsPerHour;

// Half-open interval [start, end).
struct TimeWindow {
  EpochMs start = 0;
  EpochMs end = 0;

  bool valid() const { return start < end; }
  bool contains(EpochMs t) const { return start <= t && t < end; }
  friend bool operator==(const TimeWindow&, const TimeWindow&) = default;
};

// A calendar day in UTC, counted from 1970-01-01.
class UtcDate {
 public:
  constexpr UtcDate() = default;
  constexpr explicit UtcDate(std::int32_t days_since_epoch) : days_(days_since_epoch) {}

  static UtcDate from_ms(EpochMs t);
  // Accepts YYYY-MM-DD; throws StudyError(parse_error) otherwise.
  static UtcDate parse(std::string_view text);

  std::int32_t days_since_epoch() const { return days_; }
  EpochMs start_ms() const { return static_cast<EpochMs>(days_) * kMsPerDay; }
  EpochMs end_ms() const { return start_ms() + kMsPerDay; }
  UtcDate next() const { return UtcDate(days_ + 1); }
  std::string to_string() const;

  friend auto operator<=>(const UtcDate&, const UtcDate&) = default;

 private:
  std::int32_t days_ = 0;
};

}  // namespace fieldstudy
