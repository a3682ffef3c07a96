#include "scturan/cli/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "scturan/cli/io.hpp"

namespace scturan::cli {

Format parse_format(const std::string& name) {
  if (name == "table") return Format::Table;
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  throw std::invalid_argument("unknown format '" + name + "' (table, csv, json)");
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string render_table(const Document& doc) {
  std::vector<std::size_t> width(doc.columns.size(), 0);
  for (std::size_t c = 0; c < doc.columns.size(); ++c) width[c] = doc.columns[c].size();
  for (const auto& row : doc.rows) {
    for (std::size_t c = 0; c < row.size() && c < width.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& cells) {
    std::string text;
    for (std::size_t c = 0; c < width.size(); ++c) {
      const std::string cell = c < cells.size() ? cells[c] : "";
      text += cell;
      if (c + 1 < width.size()) text += std::string(width[c] - cell.size() + 2, ' ');
    }
    while (!text.empty() && text.back() == ' ') text.pop_back();
    os << text << '\n';
  };
  line(doc.columns);
  std::vector<std::string> rule;
  for (auto w : width) rule.emplace_back(w, '-');
  line(rule);
  for (const auto& row : doc.rows) line(row);
  return os.str();
}

}  // namespace

std::string emit(const Document& doc, Format format) {
  switch (format) {
    case Format::Table:
      return render_table(doc);
    case Format::Csv: {
      std::ostringstream os;
      auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t c = 0; c < cells.size(); ++c) os << (c ? "," : "") << csv_field(cells[c]);
        os << '\n';
      };
      line(doc.columns);
      for (const auto& row : doc.rows) line(row);
      return os.str();
    }
    case Format::Json:
      return doc.json.dump(2) + "\n";
  }
  return {};
}

std::string to_string(RowStatus s) {
  switch (s) {
    case RowStatus::Pass: return "pass";
    case RowStatus::Fail: return "fail";
    case RowStatus::Deviation: return "deviation";
  }
  return "?";
}

std::size_t VerifyReport::failures() const {
  return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const VerifyRow& r) { return r.status == RowStatus::Fail; }));
}

std::size_t VerifyReport::deviations() const {
  return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const VerifyRow& r) { return r.status == RowStatus::Deviation; }));
}

std::string big_to_string(const BigInt& v) { return v.str(); }

Document to_document(const VerifyReport& report) {
  Document doc;
  doc.columns = {"instance", "expected", "actual", "status"};
  Json rows = Json::array();
  for (const auto& r : report.rows) {
    doc.rows.push_back({r.instance, r.expected, r.actual, to_string(r.status)});
    Json row = {{"instance", r.instance}, {"expected", r.expected}, {"actual", r.actual}, {"status", to_string(r.status)}};
    if (!r.note.empty()) row["note"] = r.note;
    rows.push_back(std::move(row));
  }
  doc.json = {{"suite", report.suite},
              {"parameters", report.parameters},
              {"rows", std::move(rows)},
              {"failures", report.failures()},
              {"deviations", report.deviations()},
              {"passed", report.failures() == 0},
              {"budget_exhausted", report.budget_exhausted}};
  return doc;
}

Document to_document(const CliqueCount& count, int k) {
  Document doc;
  doc.columns = {"order", "cliques"};
  Json by_order = Json::object();
  for (const auto& [order, c] : count.by_order) {
    doc.rows.push_back({std::to_string(order), std::to_string(c)});
    by_order[std::to_string(order)] = c;
  }
  doc.rows.push_back({"total", std::to_string(count.total)});
  doc.rows.push_back({">=" + std::to_string(k), std::to_string(count.total_geq_k)});
  doc.json = {{"by_order", std::move(by_order)}, {"total", count.total}, {"total_geq_k", count.total_geq_k}, {"k", k}};
  if (!count.by_order.empty() && count.by_order.begin()->first == 1) doc.json["total_all"] = count.total_all;
  return doc;
}

Document to_document(const FormulaValue& value, const std::string& name) {
  Document doc;
  doc.columns = {"term", "value"};
  Json terms = Json::array();
  for (const auto& [label, v] : value.terms) {
    doc.rows.push_back({label, big_to_string(v)});
    terms.push_back({{"term", label}, {"value", big_to_string(v)}});
  }
  doc.rows.push_back({"value", big_to_string(value.value)});
  // values are strings so that arbitrary precision survives JSON
  doc.json = {{"formula", name}, {"value", big_to_string(value.value)}, {"terms", std::move(terms)}};
  if (value.closed_form) {
    doc.rows.push_back({value.closed_form->first, big_to_string(value.closed_form->second)});
    doc.json["closed_form"] = {{"form", value.closed_form->first}, {"value", big_to_string(value.closed_form->second)}};
  }
  return doc;
}

Document to_document(const EdgeCounts& counts) {
  Document doc;
  doc.columns = {"size", "edges", "at_least"};
  Json sizes = Json::object();
  for (const auto& [r, m] : counts.by_size) {
    doc.rows.push_back({std::to_string(r), std::to_string(m), std::to_string(counts.at_least.at(r))});
    sizes[std::to_string(r)] = m;
  }
  doc.rows.push_back({"total", std::to_string(counts.total), ""});
  doc.json = {{"by_size", std::move(sizes)}, {"total", counts.total}};
  return doc;
}

std::string witness_text(const Witness& w) {
  if (const auto* g = std::get_if<UniformHypergraph>(&w)) return format_uniform(*g);
  return format_complex(std::get<GeneratingSet>(w));
}

Witness witness_from_text(const std::string& text) {
  auto obj = parse_object(text);
  if (auto* g = std::get_if<UniformHypergraph>(&obj)) return std::move(*g);
  return std::get<Complex>(obj).generating_set();
}

Json to_json(const SearchResult& r) {
  return {{"instance_key", r.instance_key},
          {"optimum", r.optimum},
          {"witness", witness_text(r.witness)},
          {"witness_kind", std::holds_alternative<UniformHypergraph>(r.witness) ? "uniform" : "complex"},
          {"nodes", r.nodes_explored},
          {"seconds", r.wall_seconds},
          {"status", to_string(r.status)},
          {"mode", to_string(r.mode_used)}};
}

SearchResult search_result_from_json(const Json& j) {
  SearchResult r;
  r.instance_key = j.at("instance_key").get<std::string>();
  r.optimum = j.at("optimum").get<std::uint64_t>();
  r.witness = witness_from_text(j.at("witness").get<std::string>());
  r.nodes_explored = j.at("nodes").get<std::uint64_t>();
  r.wall_seconds = j.at("seconds").get<double>();
  const auto status = j.value("status", std::string("exact"));
  r.status = status == "exact" ? ResultStatus::Exact : ResultStatus::LowerBoundOnly;
  const auto mode = j.value("mode", std::string("exhaustive"));
  r.mode_used = mode == "bnb" ? SearchMode::BranchAndBound : mode == "auto" ? SearchMode::Auto : SearchMode::Exhaustive;
  return r;
}

Document to_document(const SearchResult& result) {
  Document doc;
  doc.columns = {"field", "value"};
  doc.rows = {{"instance_key", result.instance_key},
              {"optimum", std::to_string(result.optimum)},
              {"status", to_string(result.status)},
              {"mode", to_string(result.mode_used)},
              {"nodes", std::to_string(result.nodes_explored)},
              {"seconds", std::to_string(result.wall_seconds)}};
  std::string w = witness_text(result.witness);
  std::replace(w.begin(), w.end(), '\n', ';');
  if (!w.empty() && w.back() == ';') w.pop_back();
  doc.rows.push_back({"witness", w});
  doc.json = to_json(result);
  return doc;
}

}  // namespace scturan::cli
