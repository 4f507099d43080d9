#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fieldstudy {

// Error categories shared by every module. The string form of each code is
// what ends up in HTTP error bodies and in the CLI's `code: message` lines.
enum class Errc {
  invalid_argument,
  invalid_record,
  invalid_config,
  invalid_window,
  parse_error,
  not_found,
  duplicate,
  wrong_state,
  outside_window,
  window_past,
  corrupt_snapshot,
  corrupt_store,
  io_error,
  transport_error,
  unknown_report,
  bind_error,
};

std::string_view errc_name(Errc code);
std::optional<Errc> parse_errc(std::string_view name);

class StudyError : public std::runtime_error {
 public:
  StudyError(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const { return code_; }
  std::string_view code_name() const { return errc_name(code_); }

 private:
  Errc code_;
};

}  // namespace fieldstudy
