#include "scturan/formulas.hpp"

#include <stdexcept>

#include "scturan/constructions.hpp"

namespace scturan {

namespace {

FormulaValue from_terms(std::vector<std::pair<std::string, BigInt>> terms) {
  FormulaValue out;
  for (const auto& [name, v] : terms) out.value += v;
  out.terms = std::move(terms);
  return out;
}

std::string c(long long n, long long r) { return "C(" + std::to_string(n) + "," + std::to_string(r) + ")"; }

}  // namespace

BigInt binomial(long long n, long long r) {
  if (n < 0 || r < 0 || r > n) return 0;
  if (r > n - r) r = n - r;
  BigInt out = 1;
  for (long long i = 1; i <= r; ++i) {
    out *= n - r + i;
    out /= i;
  }
  return out;
}

FormulaValue trivial_lower_bound(int n, int k, const BigInt& exclplus) {
  std::vector<std::pair<std::string, BigInt>> terms{{"exclplus", exclplus}};
  for (int r = 0; r < k; ++r) terms.emplace_back(c(n, r), binomial(n, r));
  return from_terms(std::move(terms));
}

FormulaValue matching_clique_formula(int n, int k, int t) {
  if (t < 1) throw std::invalid_argument("matching_clique_formula needs t >= 1");
  std::vector<std::pair<std::string, BigInt>> terms;
  for (int r = 1; r <= t - 1; ++r) {
    for (int i = 1; i <= r; ++i) {
      terms.emplace_back(c(t - 1, r) + "*" + c(n - t + 1, k - i), binomial(t - 1, r) * binomial(n - t + 1, k - i));
    }
  }
  return from_terms(std::move(terms));
}

FormulaValue star_clique_count(int n, int k, int l) {
  if (l < 1) throw std::invalid_argument("star_clique_count needs l >= 1");
  return matching_clique_formula(n, k, l + 1);
}

FormulaValue disjoint_gens_formula(int n, int k, int t) {
  auto out = matching_clique_formula(n, k, t);
  for (int r = 0; r < k; ++r) out.terms.emplace_back(c(n, r), binomial(n, r));
  out.value += trivial_lower_bound(n, k, 0).value;
  return out;
}

FormulaValue asymptrivial_leading(int n, int k, int t) {
  if (t < 1) throw std::invalid_argument("asymptrivial_leading needs t >= 1");
  std::vector<std::pair<std::string, BigInt>> terms;
  for (int r = 0; r <= t - 1; ++r) terms.emplace_back(c(t - 1, r) + "*" + c(n, k - 1), binomial(t - 1, r) * binomial(n, k - 1));
  auto out = from_terms(std::move(terms));
  BigInt closed = binomial(n, k - 1);
  closed <<= (t - 1);
  out.closed_form = {{"2^" + std::to_string(t - 1) + "*" + c(n, k - 1), closed}};
  return out;
}

FormulaValue cor_cliquelin_sum(int n, int k, int t) {
  if (t < 1) throw std::invalid_argument("cor_cliquelin_sum needs t >= 1");
  std::vector<std::pair<std::string, BigInt>> terms;
  for (int r = 1; r <= t - 1; ++r) terms.emplace_back(c(t - 1, r) + "*" + c(n, k - 1), binomial(t - 1, r) * binomial(n, k - 1));
  return from_terms(std::move(terms));
}

int kmv_ell(int t) {
  if (t < 4) throw std::invalid_argument("kmv_ell needs t >= 4");
  return (t - 1) / 2;
}

FormulaValue zykov_count(int n, int t, ZykovMode mode) {
  const auto parts = turan_parts(n, t);
  // e[s] = elementary symmetric sum of degree s over the part sizes
  std::vector<BigInt> e(parts.size() + 1, 0);
  e[0] = 1;
  for (int p : parts) {
    for (std::size_t s = e.size() - 1; s >= 1; --s) e[s] += e[s - 1] * p;
  }
  std::vector<std::pair<std::string, BigInt>> terms;
  for (std::size_t s = (mode == ZykovMode::All ? 1 : 2); s < e.size(); ++s) {
    terms.emplace_back("K" + std::to_string(s), e[s]);
  }
  return from_terms(std::move(terms));
}

}  // namespace scturan
