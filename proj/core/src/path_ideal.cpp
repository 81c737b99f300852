#include "pathideal/path_ideal.hpp"

#include "pathideal/errors.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace pathideal {

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  // r * (n - k + i) / i stays integral at every step.
  for (std::int64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

BigInt composition_count(std::uint64_t s, std::uint64_t k) {
  if (k == 0) throw DomainError("composition_count requires k >= 1");
  return binomial(static_cast<std::int64_t>(s + k - 1), static_cast<std::int64_t>(k - 1));
}

PathIdealSpec::PathIdealSpec(std::uint32_t vertices, std::uint32_t path_length)
    : n(vertices), t(path_length) {
  if (n < 1) throw DomainError("path ideal needs n >= 1");
  if (t < 1) throw DomainError("path ideal needs t >= 1");
}

std::uint64_t Composition::sum() const noexcept {
  return std::accumulate(parts.begin(), parts.end(), std::uint64_t{0});
}

std::vector<Composition> compositions(std::uint32_t s, std::uint32_t k, std::size_t max_count) {
  if (k == 0) throw DomainError("compositions need k >= 1");
  const BigInt expected = composition_count(s, k);
  if (expected > max_count)
    throw CapExceeded("composition", max_count,
                      expected > BigInt(std::numeric_limits<std::size_t>::max())
                          ? std::numeric_limits<std::size_t>::max()
                          : expected.convert_to<std::size_t>());

  std::vector<Composition> out;
  out.reserve(expected.convert_to<std::size_t>());
  std::vector<std::uint32_t> a(k, 0);
  a[0] = s;
  while (true) {
    out.push_back(Composition{a});
    // Successor in decreasing lex order: move one unit from the last nonzero
    // entry before the tail into the position right after it, collecting the
    // tail there as well.
    std::int64_t i = static_cast<std::int64_t>(k) - 2;
    while (i >= 0 && a[i] == 0) --i;
    if (i < 0) break;
    std::uint32_t tail = 0;
    for (std::size_t j = i + 1; j < k; ++j) {
      tail += a[j];
      a[j] = 0;
    }
    --a[i];
    a[i + 1] = tail + 1;
  }
  return out;
}

std::vector<Monomial> line_graph_generators(const PathIdealSpec& spec) {
  std::vector<Monomial> gens;
  for (std::uint32_t i = 0; i < spec.generator_count(); ++i) {
    Monomial u(spec.n);
    for (std::uint32_t k = i; k < i + spec.t; ++k) u[k] = 1;
    gens.push_back(std::move(u));
  }
  return gens;
}

MonomialIdeal path_ideal(const PathIdealSpec& spec) {
  return minimalize(spec.n, line_graph_generators(spec));
}

Monomial composition_to_monomial(const PathIdealSpec& spec, const Composition& c) {
  if (c.size() != spec.generator_count())
    throw DomainError("composition has " + std::to_string(c.size()) + " parts, expected " +
                      std::to_string(spec.generator_count()));
  const auto gens = line_graph_generators(spec);
  Monomial m(spec.n);
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (c.parts[i] > 0) m = mul(m, pow(gens[i], c.parts[i]));
  return m;
}

std::vector<PowerGenerator> power_generators(const PathIdealSpec& spec, std::uint32_t s,
                                             std::size_t max_count) {
  if (spec.is_zero()) throw DomainError("power_generators requires n >= t");
  if (s == 0) throw DomainError("power_generators requires s >= 1");
  std::vector<PowerGenerator> out;
  for (auto& c : compositions(s, spec.generator_count(), max_count)) {
    Monomial m = composition_to_monomial(spec, c);
    out.push_back(PowerGenerator{std::move(c), std::move(m)});
  }
  return out;
}

MonomialIdeal power_plus_tail(const PathIdealSpec& spec, std::uint32_t s, std::uint32_t j) {
  if (spec.is_zero()) throw DomainError("power_plus_tail requires n >= t");
  if (j < 1 || j > spec.generator_count()) throw DomainError("tail index j out of range");
  std::vector<Monomial> gens;
  for (auto& g : power_generators(spec, s)) gens.push_back(std::move(g.monomial));
  const auto u = line_graph_generators(spec);
  for (std::uint32_t i = j; i <= spec.generator_count(); ++i) gens.push_back(u[i - 1]);
  return minimalize(spec.n, std::move(gens));
}

} // namespace pathideal
