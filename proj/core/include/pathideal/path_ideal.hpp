#pragma once

#include "pathideal/monomial.hpp"

#include <compare>
#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace pathideal {

using BigInt = boost::multiprecision::cpp_int;

/// Exact binomial coefficient; 0 when k < 0 or k > n.
BigInt binomial(std::int64_t n, std::int64_t k);

/// Number of (a_1..a_k) in Z_{>=0}^k summing to s, i.e. binom(s+k-1, k-1).
BigInt composition_count(std::uint64_t s, std::uint64_t k);

/// The t-path ideal of the line graph on n vertices x_1 - x_2 - ... - x_n.
struct PathIdealSpec {
  std::uint32_t n = 1;
  std::uint32_t t = 1;

  PathIdealSpec(std::uint32_t vertices, std::uint32_t path_length);

  /// n - t + 1 when n >= t, else 0.
  std::uint32_t generator_count() const noexcept { return n >= t ? n - t + 1 : 0; }
  bool is_zero() const noexcept { return n < t; }
};

/// Exponents (a_1, ..., a_k) of a product u_1^{a_1} ... u_k^{a_k}.
struct Composition {
  std::vector<std::uint32_t> parts;

  std::uint64_t sum() const noexcept;
  std::size_t size() const noexcept { return parts.size(); }

  friend bool operator==(const Composition&, const Composition&) = default;
  friend auto operator<=>(const Composition& a, const Composition& b) {
    return a.parts <=> b.parts;
  }
};

/// All compositions of s into k parts, lexicographically decreasing:
/// (s,0,..,0) first, (0,..,0,s) last.
std::vector<Composition> compositions(std::uint32_t s, std::uint32_t k,
                                      std::size_t max_count = 1'000'000);

/// u_1, ..., u_{n-t+1} with u_i = x_i x_{i+1} ... x_{i+t-1}.
std::vector<Monomial> line_graph_generators(const PathIdealSpec& spec);

/// I_t(L_n) as a MonomialIdeal; the zero ideal when n < t.
MonomialIdeal path_ideal(const PathIdealSpec& spec);

Monomial composition_to_monomial(const PathIdealSpec& spec, const Composition& c);

struct PowerGenerator {
  Composition composition;
  Monomial monomial;
};

/// Generators of I_t(L_n)^s named by compositions, in the order of
/// compositions(s, n-t+1).
std::vector<PowerGenerator> power_generators(const PathIdealSpec& spec, std::uint32_t s,
                                             std::size_t max_count = 1'000'000);

/// (I^s, u_{n-t+1}, u_{n-t}, ..., u_j) for 1-based j in [1, n-t+1].
MonomialIdeal power_plus_tail(const PathIdealSpec& spec, std::uint32_t s, std::uint32_t j);

} // namespace pathideal
