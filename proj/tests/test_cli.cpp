#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "scturan/canonical.hpp"
#include "scturan/cli/cache.hpp"
#include "scturan/cli/io.hpp"
#include "scturan/cli/patterns.hpp"
#include "scturan/cli/report.hpp"
#include "scturan/cli/verify.hpp"
#include "scturan/constructions.hpp"

using namespace scturan;
using namespace scturan::cli;

namespace {

std::string temp_path(const std::string& name) {
  const auto p = std::filesystem::temp_directory_path() / ("scturan_test_" + name);
  std::filesystem::remove(p);
  return p.string();
}

int error_line(const std::string& text) {
  try {
    parse_uniform(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

}  // namespace

TEST_CASE("uniform file format") {
  const auto g = parse_uniform("3 2\n0 1\n1 2\n");
  CHECK(g.n() == 3);
  CHECK(g.k() == 2);
  CHECK(g.edge_count() == 2);
  CHECK(parse_uniform("# comment\n4 3\n0 1 2  # trailing\n\n1 2 3\n").edge_count() == 2);
  CHECK(error_line("3 2\n0 1\n1 0\n") == 3);
  CHECK(error_line("3 2\n0 3\n") == 2);
  CHECK(error_line("3 2\n0 1 2\n") == 2);
  CHECK(error_line("3 2\n1 1\n") == 2);
  CHECK_THROWS_AS(parse_uniform(""), ParseError);
  CHECK_THROWS_AS(parse_uniform("3\n0 1\n"), ParseError);
}

TEST_CASE("complex file format") {
  const auto f1 = parse_complex("5\n0 1 2\n0 3 4\n2 3\n2 4\n");
  CHECK(f1.complex == named_complex(NamedComplex::F1));
  CHECK(f1.warnings.empty());
  const auto reduced = parse_complex("4\n0 1\n0 1 2\n");
  CHECK(reduced.warnings.size() == 1);
  CHECK(reduced.complex.generating_set().nontrivial_edges() == std::vector<VertexSet>{VertexSet{0, 1, 2}});
  CHECK_THROWS_AS(parse_complex("3\n0\n"), ParseError);
}

TEST_CASE("format round trips") {
  for (const auto& g : {complete(3, 5), turan_graph(7, 3), star(6, 3, 2), UniformHypergraph(4, 2)}) {
    CHECK(parse_uniform(format_uniform(g)) == g);
    CHECK(std::get<UniformHypergraph>(parse_object(format_uniform(g))) == g);
  }
  for (const auto& c : {case_iv(4), named_complex(NamedComplex::F4), jump(3, 2), closure_of(matching(3, 2))}) {
    CHECK(parse_complex(format_complex(c.generating_set())).complex == c);
    CHECK(std::get<Complex>(parse_object(format_complex(c.generating_set()))) == c);
  }
}

TEST_CASE("pattern expressions") {
  CHECK(parse_uniform_pattern("complete(3,4)") == complete(3, 4));
  CHECK(parse_uniform_pattern("Matching(2, 3)") == matching(2, 3));
  CHECK(parse_uniform_pattern("blowup(complete(2,2),2)") == blow_up(complete(2, 2), 2));
  CHECK(parse_complex_pattern("caseiv(3)") == case_iv(3));
  CHECK(parse_complex_pattern("F2") == named_complex(NamedComplex::F2));
  CHECK(parse_complex_pattern("m32plus(C4)") == named_complex(NamedComplex::F3));
  CHECK(parse_complex_pattern("closure(matching(3,2))") == closure_of(matching(3, 2)));
  CHECK(parse_complex_pattern("linear_cycle(3,4)") == closure_of(linear_cycle(3, 4)));
  CHECK_THROWS(parse_uniform_pattern("caseiv(3)"));
  CHECK_THROWS(parse_pattern("complete(3"));
  CHECK_THROWS(parse_pattern("/nonexistent/file/for/scturan"));
  CHECK_FALSE(pattern_catalogue().empty());
}

TEST_CASE("pattern files") {
  const auto path = temp_path("pattern.txt");
  write_file(path, "4 3\n0 1 2\n1 2 3\n");
  CHECK(parse_uniform_pattern(path) == tight_path(3, 2).padded(4));
  std::filesystem::remove(path);
}

TEST_CASE("emitters") {
  Document d{{"a", "b"}, {{"1", "x,y"}, {"22", "z"}}, Json{{"b", 1}, {"a", 2}}};
  CHECK(emit(d, Format::Csv) == "a,b\n1,\"x,y\"\n22,z\n");
  const auto json = emit(d, Format::Json);
  CHECK(json.find("\"a\"") < json.find("\"b\""));
  const auto table = emit(d, Format::Table);
  CHECK(table.find("---") != std::string::npos);
  CHECK(parse_format("csv") == Format::Csv);
  CHECK_THROWS(parse_format("xml"));
}

TEST_CASE("verify report document") {
  VerifyReport r;
  r.suite = "stars";
  r.rows.push_back({"n=5", "4", "4", RowStatus::Pass, ""});
  r.rows.push_back({"n=6", "5", "6", RowStatus::Deviation, "witness"});
  r.rows.push_back({"n=7", "6", "5", RowStatus::Fail, ""});
  CHECK(r.failures() == 1);
  CHECK(r.deviations() == 1);
  const auto d = to_document(r);
  CHECK(emit(d, Format::Csv).rfind("instance,expected,actual,status\n", 0) == 0);
  CHECK(d.json["failures"] == 1);
  CHECK(d.json["passed"] == false);
}

TEST_CASE("search results round trip through JSON") {
  const auto r = max_edges_pattern_free(5, case_iv(3));
  const auto back = search_result_from_json(to_json(r));
  CHECK(back.optimum == r.optimum);
  CHECK(back.instance_key == r.instance_key);
  CHECK(back.status == r.status);
  CHECK(std::get<GeneratingSet>(back.witness) == std::get<GeneratingSet>(r.witness));
  const auto g = max_cliques_forbidden(5, 2, {complete(2, 3)}, CliqueMode::GeqK);
  CHECK(std::get<UniformHypergraph>(witness_from_text(witness_text(g.witness))) ==
        std::get<UniformHypergraph>(g.witness));
}

TEST_CASE("cache reuse and rejection") {
  const auto path = temp_path("cache.jsonl");
  const Instance inst = PatternFreeInstance{5, case_iv(3)};
  CHECK_FALSE(lookup(path, inst).has_value());
  const auto r = solve(inst);
  append_record(path, make_record(r, "ex", Json{{"n", 5}}));
  const auto hit = lookup(path, inst);
  REQUIRE(hit.has_value());
  CHECK(hit->optimum == r.optimum);
  CHECK_FALSE(lookup(path, Instance{PatternFreeInstance{6, case_iv(3)}}).has_value());

  // a later record with an inflated optimum must not be served
  auto bad = make_record(r, "ex", Json{{"n", 5}});
  bad.optimum += 3;
  append_record(path, bad);
  {
    std::ofstream out(path, std::ios::app);
    out << "not json\n";
  }
  std::size_t rejected = 0;
  const auto again = lookup(path, inst, &rejected);
  REQUIRE(again.has_value());
  CHECK(again->optimum == r.optimum);
  CHECK(rejected == 2);
  std::filesystem::remove(path);
}

TEST_CASE("verify suites") {
  CHECK(suite_names().size() == 7);
  CHECK_THROWS_AS(run_verify_suite("nope", {}), std::invalid_argument);
  SuiteParams p;
  p.max_n = 8;
  const auto stars = run_verify_suite("stars", p);
  CHECK_FALSE(stars.rows.empty());
  CHECK(stars.failures() == 0);
  p.cases = 40;
  CHECK(run_verify_suite("berge", p).failures() == 0);
  CHECK(run_verify_suite("peel", p).failures() == 0);
  CHECK(parse_range("3..5") == std::pair{3, 5});
  CHECK(parse_range("4") == std::pair{4, 4});
  CHECK_THROWS(parse_range("5..3"));
}

TEST_CASE("seeded generators are reproducible") {
  std::mt19937_64 a(99), b(99);
  for (int i = 0; i < 20; ++i) {
    const auto x = random_berge_case(a);
    const auto y = random_berge_case(b);
    CHECK(x.host == y.host);
    CHECK(x.pattern == y.pattern);
  }
  SuiteParams p;
  p.cases = 30;
  p.seed = 11;
  const auto r1 = run_verify_suite("peel", p);
  const auto r2 = run_verify_suite("peel", p);
  CHECK(emit(to_document(r1), Format::Csv) == emit(to_document(r2), Format::Csv));
}
