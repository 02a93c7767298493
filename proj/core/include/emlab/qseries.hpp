#ifndef EMLAB_QSERIES_HPP
#define EMLAB_QSERIES_HPP

#include <emlab/poly.hpp>

#include <optional>
#include <vector>

namespace emlab {

// [n]_v = 1 + v + ... + v^{n-1}; [0]_v = 0.
Poly q_analogue(unsigned n, const VarSet& vars, std::string_view v);

// [n]_v! = [1]_v [2]_v ... [n]_v; empty product for n = 0.
Poly q_factorial(unsigned n, const VarSet& vars, std::string_view v);

// Gaussian binomial [n choose k]_v, computed by the q-Pascal recurrence so
// everything stays in Z[v]. Zero for k > n.
Poly q_binomial(unsigned n, unsigned k, const VarSet& vars, std::string_view v);

// (a; qv)_n = prod_{i=0}^{n-1} (1 - a * qv^i); 1 for n = 0.
Poly pochhammer(const Poly& a, std::string_view qv, unsigned n);

// (z; q, p)_{k,l} = prod_{i=1}^{k} prod_{j=1}^{l} (1 - z q^{i-1} p^{j-1}),
// truncated to the cap. Unbounded k (resp. l) requires a cap on qv (resp.
// pv): factors beyond the cap are congruent to 1 modulo the truncation.
Poly double_pochhammer(const VarSet& vars, std::string_view zv, std::string_view qv,
                       std::string_view pv, std::optional<unsigned> k,
                       std::optional<unsigned> l, const DegreeCap& cap);

// numer / prod(factors) as a formal power series, truncated to the cap.
// Every factor must have constant term exactly 1, and every non-constant
// monomial of every factor must involve at least one capped variable
// (otherwise the expansion cannot terminate).
Poly expand_rational(const Poly& numer, const std::vector<Poly>& factors,
                     const DegreeCap& cap);

// Single-variable convenience: series in v to degree max_deg, exact in all
// other variables.
Poly expand_rational(const Poly& numer, const std::vector<Poly>& factors,
                     std::string_view v, unsigned max_deg);

// h_n evaluated at a finite alphabet of monomials: the sum over weakly
// increasing n-multisets of alphabet positions of the product.
Poly complete_homogeneous(const std::vector<Poly>& alphabet, unsigned n);

// e_k over the same kind of alphabet (strictly increasing k-subsets).
Poly elementary_symmetric(const std::vector<Poly>& alphabet, unsigned k);

// h_0, ..., h_n over the alphabet, accumulated modulo the cap. This is the
// z-coefficient extractor for 1 / prod_a (1 - z a).
std::vector<Poly> homogeneous_series(const std::vector<Poly>& alphabet, unsigned n,
                                     const DegreeCap& cap);

}  // namespace emlab

#endif
