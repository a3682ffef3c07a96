#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "scturan/cliques.hpp"
#include "scturan/complex.hpp"
#include "scturan/extremal.hpp"
#include "scturan/formulas.hpp"

namespace scturan::cli {

using Json = nlohmann::json;

enum class Format { Table, Csv, Json };
Format parse_format(const std::string& name);

/// Rows for table/CSV output plus the JSON form of the same object.
struct Document {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  Json json;
};

/// Deterministic text; JSON keys come out sorted.
std::string emit(const Document& doc, Format format);

enum class RowStatus { Pass, Fail, Deviation };
std::string to_string(RowStatus s);

struct VerifyRow {
  std::string instance;
  std::string expected;
  std::string actual;
  RowStatus status = RowStatus::Pass;
  std::string note;
};

struct VerifyReport {
  std::string suite;
  Json parameters = Json::object();
  std::vector<VerifyRow> rows;
  bool budget_exhausted = false;  ///< some search stopped early

  [[nodiscard]] std::size_t failures() const;
  [[nodiscard]] std::size_t deviations() const;
};

/// CSV columns: instance,expected,actual,status.
Document to_document(const VerifyReport& report);
/// One row per order.
Document to_document(const CliqueCount& count, int k);
Document to_document(const FormulaValue& value, const std::string& name);
/// One row per edge size.
Document to_document(const EdgeCounts& counts);
Document to_document(const SearchResult& result);

/// Edge-list text of a witness (uniform or complex file format).
std::string witness_text(const Witness& w);
Witness witness_from_text(const std::string& text);

Json to_json(const SearchResult& result);
SearchResult search_result_from_json(const Json& j);

std::string big_to_string(const BigInt& v);

}  // namespace scturan::cli
