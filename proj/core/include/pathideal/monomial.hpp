#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace pathideal {

using Exponent = std::uint32_t;

/// Exponents and total degrees above this value are rejected.
inline constexpr Exponent kDefaultExponentCap = Exponent{1} << 16;

/// A monomial x^a in a polynomial ring with a fixed number of variables,
/// stored as its dense exponent vector. Variable k (0-based) is x_{k+1} in
/// printed form. The zero vector is the unit monomial 1.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::size_t ambient) : exps_(ambient, 0) {}
  explicit Monomial(std::vector<Exponent> exponents) : exps_(std::move(exponents)) {}
  Monomial(std::initializer_list<Exponent> exponents) : exps_(exponents) {}

  static Monomial variable(std::size_t ambient, std::size_t index);

  std::size_t ambient() const noexcept { return exps_.size(); }
  Exponent operator[](std::size_t k) const { return exps_[k]; }
  Exponent& operator[](std::size_t k) { return exps_[k]; }
  std::span<const Exponent> exponents() const noexcept { return exps_; }

  /// deg_k for every k summed.
  std::uint64_t degree() const noexcept;
  bool is_one() const noexcept;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial& a, const Monomial& b) { return a.exps_ <=> b.exps_; }

private:
  std::vector<Exponent> exps_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

/// Sorted set of 0-based variable indices.
class Support {
public:
  Support() = default;
  explicit Support(std::vector<std::size_t> indices);

  const std::vector<std::size_t>& indices() const noexcept { return idx_; }
  std::size_t size() const noexcept { return idx_.size(); }
  bool empty() const noexcept { return idx_.empty(); }
  bool contains(std::size_t k) const;
  bool disjoint(const Support& other) const;
  Support united(const Support& other) const;

  friend bool operator==(const Support&, const Support&) = default;

private:
  std::vector<std::size_t> idx_;
};

bool divides(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);
Monomial mul(const Monomial& a, const Monomial& b, Exponent cap = kDefaultExponentCap);
Monomial pow(const Monomial& a, std::uint32_t e, Exponent cap = kDefaultExponentCap);
/// a / gcd(a, b): componentwise max(a_k - b_k, 0).
Monomial quotient(const Monomial& a, const Monomial& b);
Support support(const Monomial& m);

/// A monomial ideal held by its minimal generating set, sorted ascending by
/// exponent vector. The empty generating set is the zero ideal.
class MonomialIdeal {
public:
  explicit MonomialIdeal(std::size_t ambient) : ambient_(ambient) {}

  /// Minimalizes `gens`. All generators must have `ambient` variables.
  MonomialIdeal(std::size_t ambient, std::vector<Monomial> gens);

  std::size_t ambient() const noexcept { return ambient_; }
  const std::vector<Monomial>& generators() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }
  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_unit() const;

  bool contains(const Monomial& m) const;
  Support support() const;
  Monomial lcm_of_generators() const;

  /// All generators share one total degree. False for the zero ideal.
  bool equigenerated() const;
  std::uint64_t min_degree() const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
  std::size_t ambient_ = 0;
  std::vector<Monomial> gens_;
};

MonomialIdeal minimalize(std::size_t ambient, std::vector<Monomial> gens);
MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& m);
MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal ideal_product(const MonomialIdeal& a, const MonomialIdeal& b,
                            std::size_t max_generators = 1'000'000);
/// I^s for s >= 1. Throws CapExceeded before the product set grows past
/// `max_generators`.
MonomialIdeal ideal_power(const MonomialIdeal& ideal, std::uint32_t s,
                          std::size_t max_generators = 1'000'000);
bool generated_by_variables(const MonomialIdeal& ideal);

} // namespace pathideal
