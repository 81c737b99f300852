#include "pathideal/linearity.hpp"

#include "pathideal/errors.hpp"

#include <algorithm>
#include <functional>

namespace pathideal {
namespace {

std::optional<Monomial> first_non_variable(const MonomialIdeal& ideal) {
  for (const auto& g : ideal.generators())
    if (g.degree() != 1) return g;
  return std::nullopt;
}

Support variables_of(const MonomialIdeal& ideal) {
  std::vector<std::size_t> idx;
  for (const auto& g : ideal.generators())
    if (g.degree() == 1) idx.push_back(support(g).indices().front());
  return Support(std::move(idx));
}

} // namespace

std::vector<Composition> quotient_order_sort(std::vector<Composition> comps) {
  if (!comps.empty()) {
    const auto s = comps.front().sum();
    for (const auto& c : comps) {
      if (c.sum() != s) throw DomainError("compositions with unequal sums cannot be ordered");
      if (c.size() != comps.front().size()) throw DomainError("compositions differ in length");
    }
  }
  std::sort(comps.begin(), comps.end(), std::greater<>{});
  return comps;
}

Support closed_form_colon(const Composition& c) {
  std::vector<std::size_t> idx;
  for (std::size_t p = 1; p < c.size(); ++p)
    if (c.parts[p] > 0) idx.push_back(p - 1);
  return Support(std::move(idx));
}

std::vector<std::size_t> QuotientCertificate::census() const {
  std::vector<std::size_t> out;
  for (std::size_t j = 1; j < r.size(); ++j) {
    if (out.size() <= r[j]) out.resize(r[j] + 1, 0);
    ++out[r[j]];
  }
  return out;
}

LinearQuotientsResult linear_quotients_check(const std::vector<Monomial>& order) {
  QuotientCertificate cert;
  if (order.empty()) return cert;
  const auto ambient = order.front().ambient();
  cert.colon_variables.emplace_back();
  cert.r.push_back(0);

  // The prefix generating set grows by one monomial per step; the divisor
  // changes each step, so the quotients are recomputed against it.
  std::vector<Monomial> prefix{order.front()};
  for (std::size_t j = 1; j < order.size(); ++j) {
    std::vector<Monomial> q;
    q.reserve(prefix.size());
    for (const auto& g : prefix) q.push_back(quotient(g, order[j]));
    MonomialIdeal c = minimalize(ambient, std::move(q));
    if (auto bad = first_non_variable(c))
      return QuotientFailure{j, order[j], std::move(c), std::move(*bad)};
    auto vars = variables_of(c);
    cert.r.push_back(vars.size());
    cert.colon_variables.push_back(std::move(vars));
    prefix.push_back(order[j]);
  }
  return cert;
}

LinearQuotientsResult linear_quotients_check(const PathIdealSpec& spec, std::uint32_t s,
                                             const std::vector<Composition>& order) {
  const auto expected = compositions(s, spec.generator_count());
  {
    auto sorted = order;
    std::sort(sorted.begin(), sorted.end());
    auto reference = expected;
    std::sort(reference.begin(), reference.end());
    if (sorted != reference) throw DomainError("order is not a permutation of G(I^s)");
  }

  std::vector<Monomial> monomials;
  monomials.reserve(order.size());
  for (const auto& c : order) monomials.push_back(composition_to_monomial(spec, c));

  auto result = linear_quotients_check(monomials);
  if (auto* cert = std::get_if<QuotientCertificate>(&result)) {
    cert->order = order;
    cert->closed_form_checked = spec.n <= 2 * spec.t;
    if (cert->closed_form_checked)
      for (std::size_t j = 1; j < order.size(); ++j)
        if (cert->colon_variables[j] != closed_form_colon(order[j]))
          cert->closed_form_mismatches.push_back(j);
  }
  return result;
}

QuasiLinearResult quasi_linear_check(const MonomialIdeal& ideal) {
  if (ideal.size() < 2) return {};
  if (!ideal.equigenerated())
    throw DomainError("quasi-linearity is defined for ideals generated in one degree");
  const auto& gens = ideal.generators();
  for (std::size_t u = 0; u < gens.size(); ++u) {
    std::vector<Monomial> q;
    for (std::size_t v = 0; v < gens.size(); ++v)
      if (v != u) q.push_back(quotient(gens[v], gens[u]));
    MonomialIdeal c = minimalize(ideal.ambient(), std::move(q));
    if (auto bad = first_non_variable(c))
      return QuasiLinearResult{false, QuasiLinearWitness{gens[u], std::move(c), std::move(*bad)}};
  }
  return {};
}

QuasiLinearObstruction quasi_linear_witness(const PathIdealSpec& spec, std::uint32_t s) {
  if (spec.n < 2 * spec.t + 1) throw DomainError("quasi_linear_witness requires n >= 2t + 1");
  if (s == 0) throw DomainError("quasi_linear_witness requires s >= 1");

  const auto u = line_graph_generators(spec);
  QuasiLinearObstruction w;
  w.alpha = pow(u.back(), s);
  w.expected_variable = spec.n - spec.t - 1;

  std::vector<Monomial> q;
  for (auto& g : power_generators(spec, s))
    if (g.monomial != w.alpha) q.push_back(quotient(g.monomial, w.alpha));
  w.colon = minimalize(spec.n, std::move(q));
  w.variables = variables_of(w.colon).indices();

  w.unique_variable_is_expected =
      w.variables.size() == 1 && w.variables.front() == w.expected_variable;
  w.expected_variable_misses_u1_power = pow(u.front(), s)[w.expected_variable] == 0;
  w.has_non_variable_generator = first_non_variable(w.colon).has_value();
  return w;
}

} // namespace pathideal
