#pragma once

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "scturan/complex.hpp"
#include "scturan/hypergraph.hpp"

namespace scturan::cli {

/// Input error carrying the 1-based line it refers to (0 when not line-specific).
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  [[nodiscard]] int line() const { return line_; }

 private:
  int line_;
};

/// "n k" header, then one edge of k vertex ids per line; '#' starts a comment.
UniformHypergraph parse_uniform(const std::string& text);

struct ParsedComplex {
  Complex complex;
  std::vector<std::string> warnings;
};
/// "n" header, then one generating edge (size >= 2) per line. Non-maximal
/// lines are dropped with a warning.
ParsedComplex parse_complex(const std::string& text);

std::string format_uniform(const UniformHypergraph& g);
std::string format_complex(const GeneratingSet& gens);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

using Object = std::variant<UniformHypergraph, Complex>;

/// Reads either format, deciding by the number of integers on the header line.
Object parse_object(const std::string& text, std::vector<std::string>* warnings = nullptr);

}  // namespace scturan::cli
