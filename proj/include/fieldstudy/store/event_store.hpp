#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "fieldstudy/core/codec.hpp"
#include "fieldstudy/core/protocol.hpp"
#include "fieldstudy/core/records.hpp"

namespace fieldstudy {

struct PartitionKey {
  InstallationId installation_id;
  UtcDate date;
  friend auto operator<=>(const PartitionKey&, const PartitionKey&) = default;
};

struct StoreStats {
  std::map<std::string, std::int64_t> records_by_kind;
  // "installation/YYYY-MM-DD" -> committed bytes.
  std::map<std::string, std::int64_t> bytes_by_partition;
  std::int64_t installations = 0;
  std::map<std::string, EpochMs> last_arrival_ms;
  std::int64_t total_records = 0;
  std::int64_t batches = 0;

  friend bool operator==(const StoreStats&, const StoreStats&) = default;
};

Json stats_to_json(const StoreStats& stats);

// Filter on record_kind_name(); nullopt keeps every kind.
using KindFilter = std::optional<std::set<std::string>>;

// Append-only record store partitioned by (installation, UTC day).
//
// On disk:
//   {dir}/{installation}/{YYYY-MM-DD}.ndjson   canonical records, one per line
//   {dir}/_meta/installations.ndjson           registration receipts
//   {dir}/_meta/batches.ndjson                 one commit line per ingested batch
//
// A batch's records are appended to their partitions first; the commit line
// that follows carries the partitions' end offsets. Opening a store
// truncates every partition to its last committed offset, so a batch whose
// commit line never made it to disk disappears entirely.
//
// Not thread-safe.
class EventStore {
 public:
  // In-memory store, nothing persisted.
  EventStore() = default;
  // Opens (creating if needed) and reloads a store directory.
  static EventStore open(const std::filesystem::path& dir);

  // Idempotent: re-registration returns the original receipt.
  RegistrationReceipt register_installation(const InstallationId& id, const std::string& study_id,
                                            EpochMs now);
  bool is_registered(const InstallationId& id) const { return receipts_.contains(id); }
  std::vector<InstallationId> installations() const;
  const RegistrationReceipt& receipt(const InstallationId& id) const;

  // The batch must already be validated by the caller. Throws
  // StudyError(not_found) for unregistered installations and io_error on
  // write failures, in which case nothing changes.
  IngestAck ingest(const EventBatch& batch, EpochMs arrival_ms);
  bool has_batch(const InstallationId& id, std::uint64_t seq) const;
  bool has_record(const RecordId& id) const { return record_ids_.contains(id); }

  std::vector<Record> read_range(const InstallationId& id, EpochMs from_ms, EpochMs to_ms,
                                 const KindFilter& kinds = std::nullopt) const;

  StoreStats stats() const;
  std::size_t record_count() const { return record_ids_.size(); }

  const std::map<PartitionKey, std::vector<Record>>& partitions() const { return partitions_; }
  const std::optional<std::filesystem::path>& directory() const { return dir_; }

 private:
  std::filesystem::path partition_path(const PartitionKey& key) const;
  void append_meta(const std::string& file, const Json& entry);

  std::optional<std::filesystem::path> dir_;
  std::map<InstallationId, RegistrationReceipt> receipts_;
  std::map<PartitionKey, std::vector<Record>> partitions_;
  std::map<PartitionKey, std::int64_t> partition_bytes_;
  std::map<InstallationId, std::set<std::uint64_t>> batches_;
  std::map<InstallationId, EpochMs> last_arrival_;
  std::unordered_set<RecordId> record_ids_;
  std::int64_t batch_count_ = 0;
};

}  // namespace fieldstudy
