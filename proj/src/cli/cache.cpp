#include "scturan/cli/cache.hpp"

#include <fstream>
#include <stdexcept>

namespace scturan::cli {

#ifndef SCTURAN_VERSION
#define SCTURAN_VERSION "0.0.0"
#endif

const char* const kToolVersion = SCTURAN_VERSION;

Json to_json(const CacheRecord& r) {
  return {{"instance_key", r.instance_key}, {"command", r.command},   {"parameters", r.parameters},
          {"optimum", r.optimum},           {"witness", r.witness},   {"nodes", r.nodes},
          {"seconds", r.seconds},           {"tool_version", r.tool_version},
          {"status", r.status},             {"mode", r.mode}};
}

CacheRecord cache_record_from_json(const Json& j) {
  CacheRecord r;
  r.instance_key = j.at("instance_key").get<std::string>();
  r.command = j.at("command").get<std::string>();
  r.parameters = j.value("parameters", Json::object());
  r.optimum = j.at("optimum").get<std::uint64_t>();
  r.witness = j.at("witness").get<std::string>();
  r.nodes = j.at("nodes").get<std::uint64_t>();
  r.seconds = j.at("seconds").get<double>();
  r.tool_version = j.at("tool_version").get<std::string>();
  r.status = j.value("status", std::string("exact"));
  r.mode = j.value("mode", std::string("exhaustive"));
  return r;
}

CacheRecord make_record(const SearchResult& result, const std::string& command, Json parameters) {
  CacheRecord r;
  r.instance_key = result.instance_key;
  r.command = command;
  r.parameters = std::move(parameters);
  r.optimum = result.optimum;
  r.witness = witness_text(result.witness);
  r.nodes = result.nodes_explored;
  r.seconds = result.wall_seconds;
  r.tool_version = kToolVersion;
  r.status = to_string(result.status);
  r.mode = to_string(result.mode_used);
  return r;
}

SearchResult to_search_result(const CacheRecord& r) {
  SearchResult out;
  out.instance_key = r.instance_key;
  out.optimum = r.optimum;
  out.witness = witness_from_text(r.witness);
  out.nodes_explored = r.nodes;
  out.wall_seconds = r.seconds;
  out.status = r.status == "exact" ? ResultStatus::Exact : ResultStatus::LowerBoundOnly;
  out.mode_used = r.mode == "bnb" ? SearchMode::BranchAndBound : SearchMode::Exhaustive;
  return out;
}

void append_record(const std::string& path, const CacheRecord& record) {
  std::ofstream out(path, std::ios::app);
  if (!out) throw std::runtime_error("cannot append to cache '" + path + "'");
  out << to_json(record).dump() << '\n';
}

std::optional<SearchResult> lookup(const std::string& path, const Instance& instance, std::size_t* rejected) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  const std::string key = instance_key(instance);
  std::optional<SearchResult> found;
  std::size_t bad = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      const auto record = cache_record_from_json(Json::parse(line));
      if (record.instance_key != key || record.status != "exact") continue;
      auto result = to_search_result(record);
      if (verify_witness(result, instance)) {
        found = std::move(result);
      } else {
        ++bad;
      }
    } catch (const std::exception&) {
      ++bad;
    }
  }
  if (rejected != nullptr) *rejected = bad;
  return found;
}

}  // namespace scturan::cli
