#include "pathideal/formulas.hpp"

#include "pathideal/errors.hpp"

#include <algorithm>
#include <string>

namespace pathideal::formulas {
namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in formula");
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in formula");
  return r;
}

void require(bool ok, const char* what) {
  if (!ok) throw DomainError(what);
}

void require_linear_range(std::int64_t n, std::int64_t t, std::int64_t s) {
  require(t >= 1 && t <= n && n <= 2 * t, "closed form needs t <= n <= 2t");
  require(s >= 1, "closed form needs s >= 1");
}

} // namespace

GammaDecomposition decompose(std::int64_t n, std::int64_t t) {
  require(n >= 0, "gamma needs n >= 0");
  require(t >= 1, "gamma needs t >= 1");
  return {n, t, n / (t + 1), n % (t + 1)};
}

std::int64_t gamma(std::int64_t n, std::int64_t t) {
  const auto g = decompose(n, t);
  return checked_mul(g.d < t ? g.p : g.p + 1, t - 1);
}

std::int64_t reg_power(std::int64_t n, std::int64_t t, std::int64_t s) {
  require(t >= 2 && n >= t, "reg_power needs n >= t >= 2");
  require(s >= 1, "reg_power needs s >= 1");
  return checked_add(gamma(n, t), checked_mul(t, s - 1));
}

std::int64_t reg_linear_case(std::int64_t n, std::int64_t t, std::int64_t s) {
  require_linear_range(n, t, s);
  const auto value = checked_mul(t, s) - 1;
  if (t >= 2 && value != reg_power(n, t, s))
    throw Error("reg_linear_case disagrees with reg_power at n=" + std::to_string(n) +
                ", t=" + std::to_string(t));
  return value;
}

BigInt betti_closed_form(std::int64_t n, std::int64_t t, std::int64_t s, std::int64_t i) {
  require_linear_range(n, t, s);
  require(i >= 0, "betti index must be >= 0");
  BigInt sum = 0;
  for (std::int64_t k = i; k <= n - t; ++k)
    sum += binomial(n - t, k) * binomial(s, k) * binomial(k, i);
  return sum;
}

std::int64_t pd_closed_form(std::int64_t n, std::int64_t t, std::int64_t s) {
  require_linear_range(n, t, s);
  return std::min(n - t + 1, s + 1);
}

BigInt s_k_closed_form(std::int64_t n, std::int64_t t, std::int64_t s, std::int64_t k) {
  require(n >= t && k >= 1 && k <= n - t, "s_k needs 1 <= k <= n-t");
  require(s >= 1, "s_k needs s >= 1");
  return binomial(n - t, k) * binomial(s, k);
}

bool linear_resolution_predicate(std::int64_t n, std::int64_t t) {
  require(t >= 2 && n >= t, "predicate needs n >= t >= 2");
  return n <= 2 * t;
}

bool gamma_shift_identity(std::int64_t n, std::int64_t t) {
  require(t >= 1 && n >= t + 1, "shift identity needs n >= t+1");
  return gamma(n - t - 1, t) == gamma(n, t) - (t - 1);
}

bool gamma_superadditive(std::int64_t a, std::int64_t b, std::int64_t t) {
  require(a >= 1 && b >= 1, "superadditivity needs a, b >= 1");
  return gamma(a, t) + gamma(b, t) <= gamma(a + b + 1, t);
}

std::int64_t tail_reg(std::int64_t n, std::int64_t t, std::int64_t s, std::int64_t j) {
  require(t >= 2 && n >= 2 * t + 1, "tail formula needs n >= 2t+1");
  require(s >= 1, "tail formula needs s >= 1");
  require(j >= 2 && j <= n - t + 1, "tail formula needs 2 <= j <= n-t+1");
  return reg_power(n, t, s);
}

} // namespace pathideal::formulas
