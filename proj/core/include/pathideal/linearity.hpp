#pragma once

#include "pathideal/monomial.hpp"
#include "pathideal/path_ideal.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace pathideal {

/// Sorts compositions of a common sum into descending lexicographic order,
/// which is the linear-quotient order on G(I^s): u_1^s first, u_{n-t+1}^s last.
std::vector<Composition> quotient_order_sort(std::vector<Composition> comps);

/// Predicted colon variables for the generator named by `c`: x_{l-1} for every
/// 1-based position l >= 2 with c_l > 0. Returned as 0-based indices.
Support closed_form_colon(const Composition& c);

/// Result of walking an order whose every prefix colon was generated by
/// variables. Index 0 is the first generator, which has no colon.
struct QuotientCertificate {
  std::vector<Composition> order;
  std::vector<Support> colon_variables;
  std::vector<std::size_t> r;
  bool closed_form_checked = false;
  /// Positions where the brute-force colon disagreed with closed_form_colon.
  std::vector<std::size_t> closed_form_mismatches;

  /// |{j >= 1 : r_j = k}|, indexed by k.
  std::vector<std::size_t> census() const;
};

/// First position whose prefix colon has a generator of degree > 1.
struct QuotientFailure {
  std::size_t position = 0;
  Monomial generator;
  MonomialIdeal colon{0};
  Monomial offending;
};

using LinearQuotientsResult = std::variant<QuotientCertificate, QuotientFailure>;

/// Generic check on an explicit generator order: for each j >= 1 computes
/// (g_0, ..., g_{j-1}) : g_j by brute force.
LinearQuotientsResult linear_quotients_check(const std::vector<Monomial>& order);

/// Check on G(I_t(L_n)^s) in the given composition order. When n <= 2t the
/// colon at each step is also compared to closed_form_colon.
LinearQuotientsResult linear_quotients_check(const PathIdealSpec& spec, std::uint32_t s,
                                             const std::vector<Composition>& order);

struct QuasiLinearWitness {
  Monomial generator;
  MonomialIdeal colon{0};
  Monomial offending;
};

struct QuasiLinearResult {
  bool quasi_linear = true;
  std::optional<QuasiLinearWitness> witness;
};

/// For each u in G(I), is (G(I) \ {u}) : u generated by variables? Generators
/// are tried in canonical order; the first failure is the witness.
QuasiLinearResult quasi_linear_check(const MonomialIdeal& ideal);

/// The obstruction to quasi-linearity of I_t(L_n)^s at alpha = u_{n-t+1}^s.
struct QuasiLinearObstruction {
  Monomial alpha;
  MonomialIdeal colon{0};
  /// Degree-one generators of the colon, 0-based.
  std::vector<std::size_t> variables;
  /// 0-based index of x_{n-t}.
  std::size_t expected_variable = 0;
  bool unique_variable_is_expected = false;
  bool expected_variable_misses_u1_power = false;
  bool has_non_variable_generator = false;

  bool confirmed() const noexcept {
    return unique_variable_is_expected && expected_variable_misses_u1_power &&
           has_non_variable_generator;
  }
};

/// Requires n >= 2t + 1.
QuasiLinearObstruction quasi_linear_witness(const PathIdealSpec& spec, std::uint32_t s);

} // namespace pathideal
