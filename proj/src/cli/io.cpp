#include "scturan/cli/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace scturan::cli {

namespace {

struct Line {
  int number;
  std::vector<long long> values;
};

// Non-empty, comment-stripped lines as integer lists.
std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream fields(raw);
    std::string tok;
    Line line{number, {}};
    while (fields >> tok) {
      std::size_t used = 0;
      long long v = 0;
      try {
        v = std::stoll(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size()) throw ParseError(number, "'" + tok + "' is not an integer");
      line.values.push_back(v);
    }
    if (!line.values.empty()) out.push_back(std::move(line));
  }
  return out;
}

VertexSet edge_from(const Line& line, long long n) {
  VertexSet e;
  for (long long v : line.values) {
    if (v < 0 || v >= n) throw ParseError(line.number, "vertex id " + std::to_string(v) + " outside [0, " + std::to_string(n) + ")");
    if (e.contains(static_cast<int>(v))) throw ParseError(line.number, "vertex " + std::to_string(v) + " repeated");
    e.insert(static_cast<int>(v));
  }
  return e;
}

long long header_n(const Line& line) {
  const long long n = line.values[0];
  if (n < 0 || n > kMaxVertices) throw ParseError(line.number, "ground set size must lie in [0, 128]");
  return n;
}

}  // namespace

UniformHypergraph parse_uniform(const std::string& text) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(0, "empty input; expected header 'n k'");
  if (lines[0].values.size() != 2) throw ParseError(lines[0].number, "header must be 'n k'");
  const long long n = header_n(lines[0]);
  const long long k = lines[0].values[1];
  if (k < 1 || k > n) throw ParseError(lines[0].number, "uniformity must lie in [1, n]");
  std::vector<VertexSet> edges;
  std::vector<std::pair<VertexSet, int>> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    if (static_cast<long long>(line.values.size()) != k) {
      throw ParseError(line.number, "expected " + std::to_string(k) + " vertices, found " + std::to_string(line.values.size()));
    }
    const VertexSet e = edge_from(line, n);
    for (const auto& [prev, at] : seen) {
      if (prev == e) throw ParseError(line.number, "duplicate edge (first on line " + std::to_string(at) + ")");
    }
    seen.emplace_back(e, line.number);
    edges.push_back(e);
  }
  return {static_cast<int>(n), static_cast<int>(k), std::move(edges)};
}

ParsedComplex parse_complex(const std::string& text) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(0, "empty input; expected header 'n'");
  if (lines[0].values.size() != 1) throw ParseError(lines[0].number, "header must be 'n'");
  const long long n = header_n(lines[0]);
  std::vector<VertexSet> family;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    if (line.values.size() < 2) throw ParseError(line.number, "generating edges need at least 2 vertices");
    family.push_back(edge_from(line, n));
  }
  std::size_t dropped = 0;
  const std::size_t given = family.size();
  auto gens = GeneratingSet::reduce(static_cast<int>(n), std::move(family), &dropped);
  ParsedComplex out{Complex(gens), {}};
  const std::size_t kept = gens.nontrivial_edges().size();
  if (dropped > 0 || kept != given) {
    out.warnings.push_back("input is not an antichain: " + std::to_string(given - kept) +
                           " edge line(s) lie inside other edges or repeat and were dropped");
  }
  return out;
}

std::string format_uniform(const UniformHypergraph& g) {
  std::ostringstream os;
  os << g.n() << ' ' << g.k() << '\n';
  auto edges = g.edges();
  std::sort(edges.begin(), edges.end(), lex_less);
  for (const auto& e : edges) os << e.to_line() << '\n';
  return os.str();
}

std::string format_complex(const GeneratingSet& gens) {
  std::ostringstream os;
  os << gens.n() << '\n';
  auto edges = gens.nontrivial_edges();
  std::sort(edges.begin(), edges.end(), size_lex_less);
  for (const auto& e : edges) os << e.to_line() << '\n';
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

Object parse_object(const std::string& text, std::vector<std::string>* warnings) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(0, "empty input");
  if (lines[0].values.size() == 2) return parse_uniform(text);
  auto parsed = parse_complex(text);
  if (warnings != nullptr) warnings->insert(warnings->end(), parsed.warnings.begin(), parsed.warnings.end());
  return parsed.complex;
}

}  // namespace scturan::cli
