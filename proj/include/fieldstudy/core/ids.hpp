#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <string_view>

namespace fieldstudy {

// Identifier generated per app installation. 8-64 URL-safe characters
// ([A-Za-z0-9._~-]).
class InstallationId {
 public:
  InstallationId() = default;
  explicit InstallationId(std::string value) : value_(std::move(value)) {}

  static bool well_formed(std::string_view value);

  const std::string& str() const { return value_; }
  bool empty() const { return value_.empty(); }

  friend auto operator<=>(const InstallationId&, const InstallationId&) = default;

 private:
  std::string value_;
};

// 128-bit record identifier rendered in the 8-4-4-4-12 hex form. Generated
// on the device as a version 4 UUID.
class RecordId {
 public:
  constexpr RecordId() = default;
  constexpr RecordId(std::uint64_t hi, std::uint64_t lo) : hi_(hi), lo_(lo) {}

  static RecordId random_v4(std::mt19937_64& rng);
  static std::optional<RecordId> parse(std::string_view text);

  bool is_nil() const { return hi_ == 0 && lo_ == 0; }
  std::uint64_t hi() const { return hi_; }
  std::uint64_t lo() const { return lo_; }
  std::string to_string() const;

  friend auto operator<=>(const RecordId&, const RecordId&) = default;

 private:
  std::uint64_t hi_ = 0;
  std::uint64_t lo_ = 0;
};

}  // namespace fieldstudy

template <>
struct std::hash<fieldstudy::InstallationId> {
  std::size_t operator()(const fieldstudy::InstallationId& id) const noexcept {
    return std::hash<std::string>{}(id.str());
  }
};

template <>
struct std::hash<fieldstudy::RecordId> {
  std::size_t operator()(const fieldstudy::RecordId& id) const noexcept {
    return static_cast<std::size_t>(id.hi() ^ (id.lo() * 0x9e3779b97f4a7c15ULL));
  }
};
