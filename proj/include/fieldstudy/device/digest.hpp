#pragma once

#include <string>
#include <string_view>

namespace fieldstudy {

// Lowercase hex SHA-256 of `data`.
std::string sha256_hex(std::string_view data);

// Incremental SHA-256 for digests over many lines.
class Sha256 {
 public:
  Sha256();
  ~Sha256();
  Sha256(const Sha256&) = delete;
  Sha256& operator=(const Sha256&) = delete;

  void update(std::string_view data);
  // Finishes the digest; the object must not be updated afterwards.
  std::string hex();

 private:
  struct Impl;
  Impl* impl_;
};

}  // namespace fieldstudy
