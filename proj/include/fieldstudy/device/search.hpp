#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace fieldstudy {

struct SearchResult {
  std::string title;
  std::string url;
  friend bool operator==(const SearchResult&, const SearchResult&) = default;
};

class SearchProvider {
 public:
  virtual ~SearchProvider() = default;
  virtual std::vector<SearchResult> search(std::string_view query) = 0;
};

// Deterministic stand-in for a web search engine: the result list depends
// only on the query text.
class OfflineSearchProvider : public SearchProvider {
 public:
  explicit OfflineSearchProvider(std::size_t results_per_page = 10)
      : results_per_page_(results_per_page) {}
  std::vector<SearchResult> search(std::string_view query) override;

 private:
  std::size_t results_per_page_;
};

}  // namespace fieldstudy
