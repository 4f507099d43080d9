#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fieldstudy/core/records.hpp"

namespace fieldstudy {

struct Violation {
  std::string field;
  std::string message;
  friend bool operator==(const Violation&, const Violation&) = default;
};

// Violations are data, not failures: validators never throw.
struct ValidationResult {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  void add(std::string field, std::string message) {
    violations.push_back({std::move(field), std::move(message)});
  }
  // True if some violation message contains `needle`.
  bool mentions(std::string_view needle) const;
  // "field: message; field: message"
  std::string summary() const;
};

bool is_valid_url(std::string_view url);
bool is_valid_utf8(std::string_view text);

ValidationResult validate_record(const Record& record);

// Checks the batch envelope and every record in it.
ValidationResult validate_batch(const EventBatch& batch);

}  // namespace fieldstudy
