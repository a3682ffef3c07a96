#pragma once

#include <optional>
#include <string>

#include "scturan/cli/report.hpp"
#include "scturan/extremal.hpp"

namespace scturan::cli {

extern const char* const kToolVersion;

struct CacheRecord {
  std::string instance_key;
  std::string command;
  Json parameters = Json::object();
  std::uint64_t optimum = 0;
  std::string witness;  ///< edge-list text
  std::uint64_t nodes = 0;
  double seconds = 0;
  std::string tool_version;
  std::string status;  ///< "exact" or "lower-bound-only"
  std::string mode;
};

Json to_json(const CacheRecord& r);
CacheRecord cache_record_from_json(const Json& j);

CacheRecord make_record(const SearchResult& result, const std::string& command, Json parameters);
SearchResult to_search_result(const CacheRecord& r);

/// Appends one JSON line.
void append_record(const std::string& path, const CacheRecord& record);

/// Latest exact record for the instance whose witness re-verifies against it.
/// Malformed lines and records that fail verification are skipped. A missing
/// file is an empty cache.
std::optional<SearchResult> lookup(const std::string& path, const Instance& instance,
                                   std::size_t* rejected = nullptr);

}  // namespace scturan::cli
