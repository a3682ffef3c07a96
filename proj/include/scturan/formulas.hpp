#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace scturan {

using BigInt = boost::multiprecision::cpp_int;

/// Exact value with its additive breakdown; value == sum of term values.
struct FormulaValue {
  BigInt value;
  std::vector<std::pair<std::string, BigInt>> terms;
  /// Alternative closed form, when one exists (checked equal to value).
  std::optional<std::pair<std::string, BigInt>> closed_form;
};

/// C(n, r); zero when r < 0, n < 0 or r > n.
BigInt binomial(long long n, long long r);

/// exclplus + sum_{r<k} C(n, r).
FormulaValue trivial_lower_bound(int n, int k, const BigInt& exclplus);

/// sum_{r=1}^{t-1} sum_{i=1}^{r} C(t-1, r) C(n-t+1, k-i).
FormulaValue matching_clique_formula(int n, int k, int t);

/// Cliques of order >= k in S^k_{n,l}: the double sum with t-1 = l.
FormulaValue star_clique_count(int n, int k, int l);

/// matching_clique_formula(n,k,t) + sum_{r<k} C(n,r).
FormulaValue disjoint_gens_formula(int n, int k, int t);

/// sum_{r=0}^{t-1} C(t-1, r) C(n, k-1); closed form 2^{t-1} C(n, k-1).
FormulaValue asymptrivial_leading(int n, int k, int t);

/// sum_{r=1}^{t-1} C(t-1, r) C(n, k-1).
FormulaValue cor_cliquelin_sum(int n, int k, int t);

/// floor((t-1)/2), t >= 4.
int kmv_ell(int t);

enum class ZykovMode { All, Geq2 };
/// Number of cliques in T(n,t): elementary symmetric sums of the part sizes.
FormulaValue zykov_count(int n, int t, ZykovMode mode);

}  // namespace scturan
