#pragma once

#include <string>
#include <vector>

#include "scturan/cli/io.hpp"

namespace scturan::cli {

/// Builds an object from a construction expression or reads it from a file.
///
/// Uniform: complete(k,t) matching(k,t) linear_path(k,t) linear_cycle(k,t)
///   tight_path(k,t) star(n,k,l) sunflower(k,t) turan(n,t) blowup(EXPR,t)
///   baber_talbot greedy_c4(n)
/// Complex: F1..F4 caseiv(k) m32plus(G) jump(k,t) dcpe(k,t,q) f4lb(nV,nW)
///   closure(EXPR)
/// Anything else is treated as a path. Names are case-insensitive.
Object parse_pattern(const std::string& expr, std::vector<std::string>* warnings = nullptr);

UniformHypergraph parse_uniform_pattern(const std::string& expr);
/// Uniform results are replaced by their downward closure.
Complex parse_complex_pattern(const std::string& expr, std::vector<std::string>* warnings = nullptr);

/// One line per construction name, for help output.
std::vector<std::string> pattern_catalogue();

}  // namespace scturan::cli
