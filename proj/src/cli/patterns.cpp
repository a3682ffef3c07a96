#include "scturan/cli/patterns.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <stdexcept>

#include "scturan/constructions.hpp"

namespace scturan::cli {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

struct Call {
  std::string name;
  std::vector<std::string> args;
  bool has_parens = false;
};

// name(arg, arg, ...) with nesting-aware comma splitting.
Call split_call(const std::string& expr) {
  Call call;
  const std::string s = trim(expr);
  const auto open = s.find('(');
  if (open == std::string::npos || s.back() != ')') {
    call.name = s;
    return call;
  }
  call.has_parens = true;
  call.name = trim(s.substr(0, open));
  const std::string inner = s.substr(open + 1, s.size() - open - 2);
  int depth = 0;
  std::string cur;
  for (char c : inner) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth < 0) throw std::invalid_argument("unbalanced parentheses in '" + expr + "'");
    if (c == ',' && depth == 0) {
      call.args.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (depth != 0) throw std::invalid_argument("unbalanced parentheses in '" + expr + "'");
  if (!trim(cur).empty() || !call.args.empty()) call.args.push_back(trim(cur));
  return call;
}

int to_int(const std::string& s, const std::string& expr) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw std::invalid_argument("'" + s + "' is not an integer in '" + expr + "'");
  return v;
}

std::vector<int> ints(const Call& call, std::size_t count, const std::string& expr) {
  if (call.args.size() != count) {
    throw std::invalid_argument(call.name + " takes " + std::to_string(count) + " argument(s): '" + expr + "'");
  }
  std::vector<int> out;
  for (const auto& a : call.args) out.push_back(to_int(a, expr));
  return out;
}

}  // namespace

Object parse_pattern(const std::string& expr, std::vector<std::string>* warnings) {
  const Call call = split_call(expr);
  const std::string name = lower(call.name);

  if (name == "complete") { auto a = ints(call, 2, expr); return complete(a[0], a[1]); }
  if (name == "matching") { auto a = ints(call, 2, expr); return matching(a[0], a[1]); }
  if (name == "linear_path") { auto a = ints(call, 2, expr); return linear_path(a[0], a[1]); }
  if (name == "linear_cycle") { auto a = ints(call, 2, expr); return linear_cycle(a[0], a[1]); }
  if (name == "tight_path") { auto a = ints(call, 2, expr); return tight_path(a[0], a[1]); }
  if (name == "star") { auto a = ints(call, 3, expr); return star(a[0], a[1], a[2]); }
  if (name == "sunflower") { auto a = ints(call, 2, expr); return sunflower(a[0], a[1]); }
  if (name == "turan") { auto a = ints(call, 2, expr); return turan_graph(a[0], a[1]); }
  if (name == "greedy_c4") { auto a = ints(call, 1, expr); return greedy_c4_free_graph(a[0]); }
  if (name == "baber_talbot") {
    if (!call.args.empty()) throw std::invalid_argument("baber_talbot takes no arguments");
    return baber_talbot_h();
  }
  if (name == "blowup") {
    if (call.args.size() != 2) throw std::invalid_argument("blowup takes (EXPR, t)");
    return blow_up(parse_uniform_pattern(call.args[0]), to_int(call.args[1], expr));
  }

  if (!call.has_parens && (name == "f1" || name == "f2" || name == "f3" || name == "f4")) {
    static constexpr NamedComplex kWhich[] = {NamedComplex::F1, NamedComplex::F2, NamedComplex::F3, NamedComplex::F4};
    return named_complex(kWhich[name[1] - '1']);
  }
  if (name == "caseiv") { auto a = ints(call, 1, expr); return case_iv(a[0]); }
  if (name == "m32plus") {
    if (call.args.size() != 1) throw std::invalid_argument("m32plus takes one crossing graph name");
    return m32_plus(parse_crossing_graph(call.args[0]));
  }
  if (name == "jump") { auto a = ints(call, 2, expr); return jump(a[0], a[1]); }
  if (name == "dcpe") { auto a = ints(call, 3, expr); return disjoint_clique_plus_edge(a[0], a[1], a[2]); }
  if (name == "f4lb") { auto a = ints(call, 2, expr); return f4_lower_bound_construction(a[0], a[1]).complex; }
  if (name == "closure") {
    if (call.args.size() != 1) throw std::invalid_argument("closure takes one expression");
    return parse_complex_pattern(call.args[0], warnings);
  }

  if (call.has_parens) throw std::invalid_argument("unknown construction '" + call.name + "'");
  if (!std::filesystem::exists(expr)) {
    throw std::invalid_argument("'" + expr + "' is neither a known construction nor an existing file");
  }
  return parse_object(read_file(expr), warnings);
}

UniformHypergraph parse_uniform_pattern(const std::string& expr) {
  auto obj = parse_pattern(expr);
  if (auto* g = std::get_if<UniformHypergraph>(&obj)) return std::move(*g);
  throw std::invalid_argument("'" + expr + "' is a complex; a uniform hypergraph is needed");
}

Complex parse_complex_pattern(const std::string& expr, std::vector<std::string>* warnings) {
  auto obj = parse_pattern(expr, warnings);
  if (auto* c = std::get_if<Complex>(&obj)) return std::move(*c);
  return closure_of(std::get<UniformHypergraph>(obj));
}

std::vector<std::string> pattern_catalogue() {
  return {
      "complete(k,t)       all k-subsets of t vertices",
      "matching(k,t)       t disjoint k-edges",
      "linear_path(k,t)    t edges, consecutive ones share a vertex",
      "linear_cycle(k,t)   t >= 3 edges in a cycle",
      "tight_path(k,t)     t consecutive windows of width k",
      "star(n,k,l)         k-subsets of [0,n) meeting [0,l)",
      "sunflower(k,t)      t edges through vertex 0",
      "turan(n,t)          balanced complete t-partite graph",
      "blowup(EXPR,t)      t-blow-up of a uniform expression",
      "baber_talbot        {012},{013},{234},{045}",
      "greedy_c4(n)        greedy C4-free graph",
      "F1 F2 F3 F4         named complexes",
      "caseiv(k)           {0..k-1},{0,k..2k-3},{1,k..2k-3}",
      "m32plus(G)          two triples joined by G in K2 2K2 P2+P1 2P2 P3 P4 P5 K13 C4 C6",
      "jump(k,t)           tight path plus a (2t-2)-edge",
      "dcpe(k,t,q)         K_{t+1}, a disjoint k-edge, q vertices",
      "f4lb(nV,nW)         F4-free lower-bound construction",
      "closure(EXPR)       downward closure of a uniform expression",
      "PATH                uniform or complex file",
  };
}

}  // namespace scturan::cli
