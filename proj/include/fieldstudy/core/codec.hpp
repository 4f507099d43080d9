#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "fieldstudy/core/records.hpp"
#include "fieldstudy/core/validation.hpp"

namespace fieldstudy {

using Json = nlohmann::json;

// Canonical record encoding: a JSON object with sorted keys. Optional fields
// are omitted when absent. `type` is one of sensor, interaction, query,
// bookmark, questionnaire.
Json record_to_json(const Record& record);

// Decodes a wire object. Every structural problem (unknown type or kind,
// missing or extra keys, wrong value types) and every semantic violation is
// appended to `out`; returns nullopt if any structural problem prevented
// decoding.
std::optional<Record> decode_record(const Json& object, ValidationResult& out);

// Structural and semantic validation of a wire object.
ValidationResult validate_record_json(const Json& object);

// Throws StudyError(invalid_record) when the record is invalid.
std::string canonical_serialize(const Record& record);

// Throws StudyError(parse_error) on malformed JSON and
// StudyError(invalid_record) on schema violations.
Record parse_record(std::string_view line);
Record record_from_json(const Json& object);

Json batch_to_json(const EventBatch& batch);
EventBatch batch_from_json(const Json& object);

}  // namespace fieldstudy
