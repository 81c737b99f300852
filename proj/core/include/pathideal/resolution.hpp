#pragma once

#include "pathideal/monomial.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pathideal {

/// The coefficient field GF(p).
struct FieldSpec {
  std::uint32_t characteristic = 2;

  FieldSpec() = default;
  explicit FieldSpec(std::uint32_t p);
};

/// A simplicial complex on a subset of the ambient variables. Faces are
/// bitmasks over 0-based variable indices; faces_by_dim[d + 1] holds the
/// faces of dimension d, so faces_by_dim[0] is {empty face} when present.
/// A complex with no faces at all is the void complex.
struct SimplicialComplexFaces {
  Support vertices;
  std::vector<std::vector<std::uint32_t>> faces_by_dim;

  bool is_void() const noexcept { return faces_by_dim.empty(); }
  std::size_t face_count() const noexcept;
  bool contains(std::uint32_t face) const;
  bool closed_under_subsets() const;
};

/// Largest ambient the bitmask-based oracle accepts.
inline constexpr std::size_t kMaxOracleAmbient = 31;

/// Faces are the squarefree sigma inside supp(b) with x^b / x^sigma in I.
SimplicialComplexFaces upper_koszul_complex(const MonomialIdeal& ideal, const Monomial& b);

/// Build a complex from its maximal faces (given as 0-based vertex lists).
SimplicialComplexFaces complex_from_facets(const std::vector<std::vector<std::size_t>>& facets);

/// dim of reduced homology H~_d for d = -1, 0, 1, ...; element 0 is d = -1.
/// Empty for the void complex.
std::vector<std::uint64_t> reduced_homology_dims(const SimplicialComplexFaces& cx,
                                                 const FieldSpec& field);

/// Multigraded Betti numbers beta_{i,b}(I) of an ideal I (not of R/I).
class BettiTable {
public:
  using Key = std::pair<std::uint32_t, Monomial>;

  BettiTable(std::size_t ambient, std::uint32_t characteristic)
      : ambient_(ambient), characteristic_(characteristic) {}

  std::size_t ambient() const noexcept { return ambient_; }
  std::uint32_t characteristic() const noexcept { return characteristic_; }
  const std::map<Key, std::uint64_t>& entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }

  /// Adds `rank` to beta_{i,b}; zero ranks are ignored.
  void add(std::uint32_t i, const Monomial& b, std::uint64_t rank);
  std::uint64_t at(std::uint32_t i, const Monomial& b) const;

  /// beta_{i,j}, keyed by (i, total degree j).
  std::map<std::pair<std::uint32_t, std::uint64_t>, std::uint64_t> graded() const;
  /// beta_i for i = 0 .. max index.
  std::vector<std::uint64_t> totals() const;

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

private:
  std::size_t ambient_;
  std::uint32_t characteristic_;
  std::map<Key, std::uint64_t> entries_;
};

struct OracleOptions {
  std::size_t lattice_cap = 200'000;
  unsigned jobs = 1;
};

/// All lcms of nonempty subsets of G(I), sorted ascending. Throws CapExceeded
/// once more than `cap` distinct multidegrees are found.
std::vector<Monomial> lcm_lattice(const MonomialIdeal& ideal, std::size_t cap);

/// beta_{i,b}(I) = dim H~_{i-1}(K^b(I)) over every b in the lcm lattice.
BettiTable betti_table(const MonomialIdeal& ideal, const FieldSpec& field,
                       const OracleOptions& options = {});

/// reg R/I. R/0 = R gives 0; the unit ideal is rejected.
std::int64_t regularity_of_quotient(const BettiTable& table);
std::int64_t regularity_of_quotient(const MonomialIdeal& ideal, const FieldSpec& field,
                                    const OracleOptions& options = {});

/// pd R/I = 1 + max{i : beta_i(I) != 0}; 0 for the zero ideal.
std::int64_t projective_dimension_of_quotient(const BettiTable& table);
std::int64_t projective_dimension_of_quotient(const MonomialIdeal& ideal, const FieldSpec& field,
                                              const OracleOptions& options = {});

/// Reason the resolution of I is not linear, or nothing when it is.
/// Ideals not generated in a single degree are reported as non-linear.
std::optional<std::string> linear_resolution_diagnostic(const MonomialIdeal& ideal,
                                                        const BettiTable& table);
bool has_linear_resolution(const MonomialIdeal& ideal, const BettiTable& table);
bool has_linear_resolution(const MonomialIdeal& ideal, const FieldSpec& field,
                           const OracleOptions& options = {});

} // namespace pathideal
