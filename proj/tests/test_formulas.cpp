#include <doctest.h>

#include "scturan/cliques.hpp"
#include "scturan/constructions.hpp"
#include "scturan/formulas.hpp"

using namespace scturan;

namespace {

BigInt term_sum(const FormulaValue& v) {
  BigInt s = 0;
  for (const auto& [label, x] : v.terms) s += x;
  return s;
}

// Independent Pascal-triangle binomial.
BigInt pascal(int n, int r) {
  if (r < 0 || n < 0 || r > n) return 0;
  std::vector<BigInt> row{1};
  for (int i = 1; i <= n; ++i) {
    std::vector<BigInt> next(static_cast<std::size_t>(i + 1), 1);
    for (int j = 1; j < i; ++j) next[static_cast<std::size_t>(j)] = row[static_cast<std::size_t>(j - 1)] + row[static_cast<std::size_t>(j)];
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(r)];
}

}  // namespace

TEST_CASE("binomials") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(-2, 1) == 0);
  CHECK(binomial(0, 0) == 1);
  for (int n = 0; n <= 40; ++n) {
    for (int r = -1; r <= n + 1; ++r) CHECK(binomial(n, r) == pascal(n, r));
  }
  CHECK(binomial(200, 100) == pascal(200, 100));
}

TEST_CASE("trivial lower bound") {
  CHECK(trivial_lower_bound(6, 3, 0).value == 22);
  CHECK(trivial_lower_bound(4, 2, 0).value == 5);
  CHECK(trivial_lower_bound(5, 2, 4).value == 10);
  CHECK(trivial_lower_bound(7, 3, 0).value == 29);
}

TEST_CASE("matching clique formula") {
  for (int n = 3; n <= 10; ++n) CHECK(matching_clique_formula(n, 2, 1).value == 0);
  CHECK(matching_clique_formula(5, 2, 2).value == 4);
  CHECK(matching_clique_formula(6, 3, 2).value == 10);
  for (int n = 4; n <= 12; ++n) CHECK(matching_clique_formula(n, 2, 2).value == n - 1);
}

TEST_CASE("star clique count") {
  CHECK(star_clique_count(5, 2, 1).value == 4);
  CHECK(star_clique_count(6, 3, 1).value == 10);
  for (int n = 5; n <= 15; ++n) {
    for (int k = 2; k <= 4; ++k) {
      for (int l = 1; l <= 3; ++l) CHECK(star_clique_count(n, k, l).value == matching_clique_formula(n, k, l + 1).value);
    }
  }
}

TEST_CASE("disjoint generators formula") {
  CHECK(disjoint_gens_formula(6, 3, 2).value == 32);
  CHECK(disjoint_gens_formula(10, 2, 3).value == 36);
  for (int n = 4; n <= 12; ++n) {
    for (int k = 2; k <= 4; ++k) {
      CHECK(disjoint_gens_formula(n, k, 1).value == trivial_lower_bound(n, k, 0).value);
      for (int t = 1; t <= 4; ++t) {
        CHECK(disjoint_gens_formula(n, k, t).value ==
              matching_clique_formula(n, k, t).value + trivial_lower_bound(n, k, 0).value);
      }
    }
  }
}

TEST_CASE("asymptotic leading term") {
  for (int n = 3; n <= 20; ++n) CHECK(asymptrivial_leading(n, 3, 2).value == 2 * binomial(n, 2));
  const auto v = asymptrivial_leading(20, 3, 3);
  CHECK(v.value == 760);
  REQUIRE(v.closed_form.has_value());
  CHECK(v.closed_form->second == 760);
  for (int n = 5; n <= 15; ++n) {
    for (int k = 3; k <= 5; ++k) {
      for (int t = 2; t <= 5; ++t) {
        CHECK(asymptrivial_leading(n, k, t).value - cor_cliquelin_sum(n, k, t).value == binomial(n, k - 1));
      }
    }
  }
}

TEST_CASE("kmv ell") {
  CHECK(kmv_ell(4) == 1);
  CHECK(kmv_ell(5) == 2);
  CHECK(kmv_ell(7) == 3);
  CHECK_THROWS(kmv_ell(3));
}

TEST_CASE("Zykov counts") {
  CHECK(zykov_count(6, 3, ZykovMode::All).value == 26);
  CHECK(zykov_count(7, 3, ZykovMode::Geq2).value == 28);
  for (int n = 1; n <= 8; ++n) CHECK(zykov_count(n, 1, ZykovMode::Geq2).value == 0);
  for (int n = 2; n <= 12; ++n) {
    for (int t = 1; t <= 5; ++t) {
      const auto c = count_cliques(turan_graph(n, t), 1);
      CHECK(zykov_count(n, t, ZykovMode::All).value == c.total_all);
      CHECK(zykov_count(n, t, ZykovMode::Geq2).value == count_cliques(turan_graph(n, t), 2).total);
    }
  }
}

TEST_CASE("every formula value equals the sum of its terms") {
  for (int n = 4; n <= 14; ++n) {
    for (int k = 2; k <= 4; ++k) {
      for (int t = 1; t <= 4; ++t) {
        CHECK(term_sum(matching_clique_formula(n, k, t)) == matching_clique_formula(n, k, t).value);
        CHECK(term_sum(disjoint_gens_formula(n, k, t)) == disjoint_gens_formula(n, k, t).value);
        CHECK(term_sum(star_clique_count(n, k, t)) == star_clique_count(n, k, t).value);
        CHECK(term_sum(cor_cliquelin_sum(n, k, t)) == cor_cliquelin_sum(n, k, t).value);
        if (k >= 3 && t >= 2) {
          const auto a = asymptrivial_leading(n, k, t);
          CHECK(term_sum(a) == a.value);
          CHECK(a.closed_form->second == a.value);
        }
      }
      CHECK(term_sum(trivial_lower_bound(n, k, 3)) == trivial_lower_bound(n, k, 3).value);
      CHECK(term_sum(zykov_count(n, k, ZykovMode::All)) == zykov_count(n, k, ZykovMode::All).value);
    }
  }
}

TEST_CASE("formulas stay exact beyond 64 bits") {
  const auto v = trivial_lower_bound(200, 60, 0).value;
  CHECK(v > BigInt(std::numeric_limits<std::uint64_t>::max()));
  BigInt s = 0;
  for (int r = 0; r < 60; ++r) s += pascal(200, r);
  CHECK(v == s);
}
