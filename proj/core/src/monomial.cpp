#include "pathideal/monomial.hpp"

#include "pathideal/errors.hpp"

#include <algorithm>
#include <numeric>

#include <boost/container_hash/hash.hpp>

namespace pathideal {
namespace {

void require_same_ambient(const Monomial& a, const Monomial& b) {
  if (a.ambient() != b.ambient()) throw AmbientMismatch(a.ambient(), b.ambient());
}

} // namespace

Monomial Monomial::variable(std::size_t ambient, std::size_t index) {
  if (index >= ambient) throw DomainError("variable index out of range");
  Monomial m(ambient);
  m[index] = 1;
  return m;
}

std::uint64_t Monomial::degree() const noexcept {
  return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

bool Monomial::is_one() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  auto e = m.exponents();
  return boost::hash_range(e.begin(), e.end());
}

Support::Support(std::vector<std::size_t> indices) : idx_(std::move(indices)) {
  std::sort(idx_.begin(), idx_.end());
  idx_.erase(std::unique(idx_.begin(), idx_.end()), idx_.end());
}

bool Support::contains(std::size_t k) const { return std::binary_search(idx_.begin(), idx_.end(), k); }

bool Support::disjoint(const Support& other) const {
  std::vector<std::size_t> common;
  std::set_intersection(idx_.begin(), idx_.end(), other.idx_.begin(), other.idx_.end(),
                        std::back_inserter(common));
  return common.empty();
}

Support Support::united(const Support& other) const {
  std::vector<std::size_t> all;
  std::set_union(idx_.begin(), idx_.end(), other.idx_.begin(), other.idx_.end(),
                 std::back_inserter(all));
  return Support(std::move(all));
}

bool divides(const Monomial& a, const Monomial& b) {
  require_same_ambient(a, b);
  for (std::size_t k = 0; k < a.ambient(); ++k)
    if (a[k] > b[k]) return false;
  return true;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  require_same_ambient(a, b);
  Monomial r(a.ambient());
  for (std::size_t k = 0; k < a.ambient(); ++k) r[k] = std::min(a[k], b[k]);
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  require_same_ambient(a, b);
  Monomial r(a.ambient());
  for (std::size_t k = 0; k < a.ambient(); ++k) r[k] = std::max(a[k], b[k]);
  return r;
}

Monomial mul(const Monomial& a, const Monomial& b, Exponent cap) {
  require_same_ambient(a, b);
  Monomial r(a.ambient());
  std::uint64_t total = 0;
  for (std::size_t k = 0; k < a.ambient(); ++k) {
    const std::uint64_t e = std::uint64_t{a[k]} + b[k];
    if (e > cap) throw OverflowError("exponent of x" + std::to_string(k + 1) + " exceeds cap");
    r[k] = static_cast<Exponent>(e);
    total += e;
  }
  if (total > cap) throw OverflowError("total degree exceeds cap");
  return r;
}

Monomial pow(const Monomial& a, std::uint32_t e, Exponent cap) {
  Monomial r(a.ambient());
  std::uint64_t total = 0;
  for (std::size_t k = 0; k < a.ambient(); ++k) {
    const std::uint64_t v = std::uint64_t{a[k]} * e;
    if (v > cap) throw OverflowError("exponent of x" + std::to_string(k + 1) + " exceeds cap");
    r[k] = static_cast<Exponent>(v);
    total += v;
  }
  if (total > cap) throw OverflowError("total degree exceeds cap");
  return r;
}

Monomial quotient(const Monomial& a, const Monomial& b) {
  require_same_ambient(a, b);
  Monomial r(a.ambient());
  for (std::size_t k = 0; k < a.ambient(); ++k) r[k] = a[k] > b[k] ? a[k] - b[k] : 0;
  return r;
}

Support support(const Monomial& m) {
  std::vector<std::size_t> idx;
  for (std::size_t k = 0; k < m.ambient(); ++k)
    if (m[k] > 0) idx.push_back(k);
  return Support(std::move(idx));
}

MonomialIdeal minimalize(std::size_t ambient, std::vector<Monomial> gens) {
  for (const auto& g : gens)
    if (g.ambient() != ambient) throw AmbientMismatch(ambient, g.ambient());

  // A divisor never has larger degree, so scanning by degree only needs to
  // look back at already-kept monomials.
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    const auto da = a.degree(), db = b.degree();
    return da != db ? da < db : a < b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  MonomialIdeal out(ambient);
  std::vector<Monomial> kept;
  kept.reserve(gens.size());
  for (auto& g : gens) {
    const bool redundant =
        std::any_of(kept.begin(), kept.end(), [&](const Monomial& k) { return divides(k, g); });
    if (!redundant) kept.push_back(std::move(g));
  }
  std::sort(kept.begin(), kept.end());
  return MonomialIdeal(ambient, std::move(kept));
}

MonomialIdeal::MonomialIdeal(std::size_t ambient, std::vector<Monomial> gens) : ambient_(ambient) {
  for (const auto& g : gens)
    if (g.ambient() != ambient) throw AmbientMismatch(ambient, g.ambient());
  // Already-minimal input (the common case from minimalize) is accepted as is.
  const bool sorted = std::is_sorted(gens.begin(), gens.end()) &&
                      std::adjacent_find(gens.begin(), gens.end()) == gens.end();
  bool minimal = sorted;
  for (std::size_t i = 0; minimal && i < gens.size(); ++i)
    for (std::size_t j = 0; j < gens.size(); ++j)
      if (i != j && divides(gens[i], gens[j])) {
        minimal = false;
        break;
      }
  if (minimal) {
    gens_ = std::move(gens);
  } else {
    gens_ = minimalize(ambient, std::move(gens)).gens_;
  }
}

bool MonomialIdeal::is_unit() const {
  return std::any_of(gens_.begin(), gens_.end(), [](const Monomial& g) { return g.is_one(); });
}

bool MonomialIdeal::contains(const Monomial& m) const {
  if (m.ambient() != ambient_) throw AmbientMismatch(ambient_, m.ambient());
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return divides(g, m); });
}

Support MonomialIdeal::support() const {
  Support s;
  for (const auto& g : gens_) s = s.united(pathideal::support(g));
  return s;
}

Monomial MonomialIdeal::lcm_of_generators() const {
  Monomial r(ambient_);
  for (const auto& g : gens_) r = lcm(r, g);
  return r;
}

bool MonomialIdeal::equigenerated() const {
  if (gens_.empty()) return false;
  const auto d = gens_.front().degree();
  return std::all_of(gens_.begin(), gens_.end(), [d](const Monomial& g) { return g.degree() == d; });
}

std::uint64_t MonomialIdeal::min_degree() const {
  if (gens_.empty()) throw DomainError("zero ideal has no generator degree");
  std::uint64_t d = gens_.front().degree();
  for (const auto& g : gens_) d = std::min(d, g.degree());
  return d;
}

MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& m) {
  if (m.ambient() != ideal.ambient()) throw AmbientMismatch(ideal.ambient(), m.ambient());
  std::vector<Monomial> q;
  q.reserve(ideal.size());
  for (const auto& g : ideal.generators()) q.push_back(quotient(g, m));
  return minimalize(ideal.ambient(), std::move(q));
}

MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.ambient() != b.ambient()) throw AmbientMismatch(a.ambient(), b.ambient());
  std::vector<Monomial> all(a.generators());
  all.insert(all.end(), b.generators().begin(), b.generators().end());
  return minimalize(a.ambient(), std::move(all));
}

MonomialIdeal ideal_product(const MonomialIdeal& a, const MonomialIdeal& b,
                            std::size_t max_generators) {
  if (a.ambient() != b.ambient()) throw AmbientMismatch(a.ambient(), b.ambient());
  const std::size_t count = a.size() * b.size();
  if (count > max_generators) throw CapExceeded("generator", max_generators, count);
  std::vector<Monomial> prods;
  prods.reserve(count);
  for (const auto& x : a.generators())
    for (const auto& y : b.generators()) prods.push_back(mul(x, y));
  return minimalize(a.ambient(), std::move(prods));
}

MonomialIdeal ideal_power(const MonomialIdeal& ideal, std::uint32_t s,
                          std::size_t max_generators) {
  if (s == 0) throw DomainError("ideal_power requires s >= 1");
  MonomialIdeal result = ideal;
  for (std::uint32_t k = 1; k < s; ++k) result = ideal_product(result, ideal, max_generators);
  return result;
}

bool generated_by_variables(const MonomialIdeal& ideal) {
  return std::all_of(ideal.generators().begin(), ideal.generators().end(),
                     [](const Monomial& g) { return g.degree() == 1; });
}

} // namespace pathideal
