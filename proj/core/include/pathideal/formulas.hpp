#pragma once

#include "pathideal/path_ideal.hpp"

#include <cstdint>

namespace pathideal::formulas {

/// n = p(t+1) + d with 0 <= d <= t.
struct GammaDecomposition {
  std::int64_t n, t, p, d;
};

GammaDecomposition decompose(std::int64_t n, std::int64_t t);

/// Regularity of R/I_t(L_n): p(t-1) when d < t, (p+1)(t-1) when d = t.
/// Defined for n >= 0, t >= 1; zero whenever n < t or t = 1.
std::int64_t gamma(std::int64_t n, std::int64_t t);

/// reg R/I_t(L_n)^s = gamma(n,t) + t(s-1) for n >= t >= 2, s >= 1.
std::int64_t reg_power(std::int64_t n, std::int64_t t, std::int64_t s);

/// ts - 1 on t <= n <= 2t.
std::int64_t reg_linear_case(std::int64_t n, std::int64_t t, std::int64_t s);

/// beta_i(I^s) = sum_{k=i}^{n-t} binom(n-t,k) binom(s,k) binom(k,i) on t <= n <= 2t.
BigInt betti_closed_form(std::int64_t n, std::int64_t t, std::int64_t s, std::int64_t i);

/// pd R/I^s = min(n-t+1, s+1) on t <= n <= 2t.
std::int64_t pd_closed_form(std::int64_t n, std::int64_t t, std::int64_t s);

/// Number of linear-quotient steps with exactly k colon variables:
/// binom(n-t,k) binom(s,k), for 1 <= k <= n-t.
BigInt s_k_closed_form(std::int64_t n, std::int64_t t, std::int64_t s, std::int64_t k);

/// Powers of I_t(L_n) have linear resolutions iff t <= n <= 2t (n >= t >= 2).
bool linear_resolution_predicate(std::int64_t n, std::int64_t t);

/// gamma(n-t-1, t) == gamma(n, t) - (t-1), for n >= t+1.
bool gamma_shift_identity(std::int64_t n, std::int64_t t);

/// gamma(a,t) + gamma(b,t) <= gamma(a+b+1,t), for a, b >= 1.
bool gamma_superadditive(std::int64_t a, std::int64_t b, std::int64_t t);

/// reg R/(I^s, u_{n-t+1}, ..., u_j) = gamma(n,t) + t(s-1); n >= 2t+1,
/// s >= 1, 2 <= j <= n-t+1.
std::int64_t tail_reg(std::int64_t n, std::int64_t t, std::int64_t s, std::int64_t j);

} // namespace pathideal::formulas
