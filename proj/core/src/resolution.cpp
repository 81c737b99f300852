#include "pathideal/resolution.hpp"

#include "pathideal/errors.hpp"
#include "pathideal/gf_rank.hpp"

#include <algorithm>
#include <bit>
#include <thread>
#include <unordered_set>

namespace pathideal {
namespace {

using Mask = std::uint32_t;

void require_oracle_ambient(std::size_t ambient) {
  if (ambient > kMaxOracleAmbient)
    throw CapExceeded("oracle ambient", kMaxOracleAmbient, ambient);
}

std::size_t face_index(const std::vector<Mask>& level, Mask face) {
  return static_cast<std::size_t>(std::lower_bound(level.begin(), level.end(), face) -
                                  level.begin());
}

// Rank of the boundary map from faces at `level` to faces at `level - 1`.
std::size_t boundary_rank(const SimplicialComplexFaces& cx, std::size_t level,
                          const FieldSpec& field) {
  const auto& rows = cx.faces_by_dim[level];
  const auto& cols = cx.faces_by_dim[level - 1];
  if (rows.empty() || cols.empty()) return 0;

  if (field.characteristic == 2) {
    BitMatrix m(rows.size(), cols.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (Mask rest = rows[r]; rest; rest &= rest - 1) {
        const Mask v = rest & -rest;
        m.flip(r, face_index(cols, rows[r] & ~v));
      }
    return rank(std::move(m));
  }

  ModMatrix m(rows.size(), cols.size(), field.characteristic);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    int position = 0;
    for (Mask rest = rows[r]; rest; rest &= rest - 1, ++position) {
      const Mask v = rest & -rest;
      m.set(r, face_index(cols, rows[r] & ~v), position % 2 == 0 ? 1 : -1);
    }
  }
  return rank(std::move(m));
}

// Generators of I dividing b, each reduced to the set of variables where it
// meets b with equal exponent. x^b / x^sigma is divisible by such a generator
// exactly when sigma avoids that set.
std::vector<Mask> tight_masks(const MonomialIdeal& ideal, const Monomial& b) {
  std::vector<Mask> out;
  for (const auto& g : ideal.generators()) {
    if (!divides(g, b)) continue;
    Mask tight = 0;
    for (std::size_t k = 0; k < b.ambient(); ++k)
      if (b[k] > 0 && g[k] == b[k]) tight |= Mask{1} << k;
    out.push_back(tight);
  }
  return out;
}

} // namespace

FieldSpec::FieldSpec(std::uint32_t p) : characteristic(p) {
  if (!is_prime(p)) throw DomainError("characteristic " + std::to_string(p) + " is not prime");
}

std::size_t SimplicialComplexFaces::face_count() const noexcept {
  std::size_t n = 0;
  for (const auto& level : faces_by_dim) n += level.size();
  return n;
}

bool SimplicialComplexFaces::contains(std::uint32_t face) const {
  const auto level = static_cast<std::size_t>(std::popcount(face));
  if (level >= faces_by_dim.size()) return false;
  return std::binary_search(faces_by_dim[level].begin(), faces_by_dim[level].end(), face);
}

bool SimplicialComplexFaces::closed_under_subsets() const {
  for (std::size_t level = 1; level < faces_by_dim.size(); ++level)
    for (Mask f : faces_by_dim[level])
      for (Mask rest = f; rest; rest &= rest - 1)
        if (!contains(f & ~(rest & -rest))) return false;
  return true;
}

SimplicialComplexFaces upper_koszul_complex(const MonomialIdeal& ideal, const Monomial& b) {
  if (b.ambient() != ideal.ambient()) throw AmbientMismatch(ideal.ambient(), b.ambient());
  require_oracle_ambient(b.ambient());

  SimplicialComplexFaces cx;
  cx.vertices = support(b);
  const auto tight = tight_masks(ideal, b);
  if (tight.empty()) return cx;

  Mask supp = 0;
  for (auto k : cx.vertices.indices()) supp |= Mask{1} << k;

  cx.faces_by_dim.resize(cx.vertices.size() + 1);
  // Walk every submask of supp, including supp itself and 0.
  Mask sub = supp;
  while (true) {
    const bool face =
        std::any_of(tight.begin(), tight.end(), [sub](Mask t) { return (sub & t) == 0; });
    if (face) cx.faces_by_dim[std::popcount(sub)].push_back(sub);
    if (sub == 0) break;
    sub = (sub - 1) & supp;
  }
  while (!cx.faces_by_dim.empty() && cx.faces_by_dim.back().empty()) cx.faces_by_dim.pop_back();
  for (auto& level : cx.faces_by_dim) std::sort(level.begin(), level.end());
  return cx;
}

SimplicialComplexFaces complex_from_facets(const std::vector<std::vector<std::size_t>>& facets) {
  SimplicialComplexFaces cx;
  std::vector<std::size_t> verts;
  std::unordered_set<Mask> seen;
  for (const auto& facet : facets) {
    Mask f = 0;
    for (auto v : facet) {
      require_oracle_ambient(v + 1);
      f |= Mask{1} << v;
      verts.push_back(v);
    }
    for (Mask sub = f;; sub = (sub - 1) & f) {
      seen.insert(sub);
      if (sub == 0) break;
    }
  }
  cx.vertices = Support(std::move(verts));
  for (Mask f : seen) {
    const auto level = static_cast<std::size_t>(std::popcount(f));
    if (cx.faces_by_dim.size() <= level) cx.faces_by_dim.resize(level + 1);
    cx.faces_by_dim[level].push_back(f);
  }
  for (auto& level : cx.faces_by_dim) std::sort(level.begin(), level.end());
  return cx;
}

std::vector<std::uint64_t> reduced_homology_dims(const SimplicialComplexFaces& cx,
                                                 const FieldSpec& field) {
  const std::size_t levels = cx.faces_by_dim.size();
  std::vector<std::size_t> ranks(levels + 1, 0);
  for (std::size_t level = 1; level < levels; ++level) ranks[level] = boundary_rank(cx, level, field);

  std::vector<std::uint64_t> dims(levels, 0);
  for (std::size_t level = 0; level < levels; ++level)
    dims[level] = cx.faces_by_dim[level].size() - ranks[level] - ranks[level + 1];
  return dims;
}

void BettiTable::add(std::uint32_t i, const Monomial& b, std::uint64_t rank) {
  if (rank == 0) return;
  if (b.ambient() != ambient_) throw AmbientMismatch(ambient_, b.ambient());
  entries_[Key{i, b}] += rank;
}

std::uint64_t BettiTable::at(std::uint32_t i, const Monomial& b) const {
  auto it = entries_.find(Key{i, b});
  return it == entries_.end() ? 0 : it->second;
}

std::map<std::pair<std::uint32_t, std::uint64_t>, std::uint64_t> BettiTable::graded() const {
  std::map<std::pair<std::uint32_t, std::uint64_t>, std::uint64_t> out;
  for (const auto& [key, rank] : entries_) out[{key.first, key.second.degree()}] += rank;
  return out;
}

std::vector<std::uint64_t> BettiTable::totals() const {
  std::vector<std::uint64_t> out;
  for (const auto& [key, rank] : entries_) {
    if (out.size() <= key.first) out.resize(key.first + 1, 0);
    out[key.first] += rank;
  }
  return out;
}

std::vector<Monomial> lcm_lattice(const MonomialIdeal& ideal, std::size_t cap) {
  const auto& gens = ideal.generators();
  std::unordered_set<Monomial, MonomialHash> all;
  std::vector<Monomial> frontier;
  for (const auto& g : gens)
    if (all.insert(g).second) frontier.push_back(g);
  if (all.size() > cap) throw CapExceeded("lcm-lattice", cap, all.size());

  // Every lcm of a subset is reached by joining one generator at a time.
  while (!frontier.empty()) {
    std::vector<Monomial> next;
    for (const auto& x : frontier)
      for (const auto& g : gens) {
        Monomial l = lcm(x, g);
        if (all.insert(l).second) {
          if (all.size() > cap) throw CapExceeded("lcm-lattice", cap, all.size());
          next.push_back(std::move(l));
        }
      }
    frontier = std::move(next);
  }
  std::vector<Monomial> out(all.begin(), all.end());
  std::sort(out.begin(), out.end());
  return out;
}

BettiTable betti_table(const MonomialIdeal& ideal, const FieldSpec& field,
                       const OracleOptions& options) {
  require_oracle_ambient(ideal.ambient());
  BettiTable table(ideal.ambient(), field.characteristic);
  if (ideal.is_zero()) return table;

  const auto lattice = lcm_lattice(ideal, options.lattice_cap);

  struct Hit {
    std::size_t b;
    std::uint32_t i;
    std::uint64_t rank;
  };
  auto work = [&](std::size_t begin, std::size_t stride, std::vector<Hit>& hits) {
    for (std::size_t idx = begin; idx < lattice.size(); idx += stride) {
      const auto cx = upper_koszul_complex(ideal, lattice[idx]);
      const auto dims = reduced_homology_dims(cx, field);
      for (std::size_t level = 0; level < dims.size(); ++level)
        if (dims[level] > 0) hits.push_back({idx, static_cast<std::uint32_t>(level), dims[level]});
    }
  };

  const unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs, lattice.size()));
  std::vector<std::vector<Hit>> per_worker(jobs);
  if (jobs == 1) {
    work(0, 1, per_worker[0]);
  } else {
    std::vector<std::jthread> workers;
    for (unsigned w = 0; w < jobs; ++w)
      workers.emplace_back([&, w] { work(w, jobs, per_worker[w]); });
  }
  for (const auto& hits : per_worker)
    for (const auto& h : hits) table.add(h.i, lattice[h.b], h.rank);
  return table;
}

std::int64_t regularity_of_quotient(const BettiTable& table) {
  // R itself sits in homological degree 0, internal degree 0.
  std::int64_t reg = 0;
  for (const auto& [key, rank] : table.entries()) {
    const auto degree = static_cast<std::int64_t>(key.second.degree());
    if (key.first == 0 && degree == 0) throw DomainError("R/I is zero for the unit ideal");
    reg = std::max(reg, degree - static_cast<std::int64_t>(key.first) - 1);
  }
  return reg;
}

std::int64_t regularity_of_quotient(const MonomialIdeal& ideal, const FieldSpec& field,
                                    const OracleOptions& options) {
  if (ideal.is_unit()) throw DomainError("R/I is zero for the unit ideal");
  return regularity_of_quotient(betti_table(ideal, field, options));
}

std::int64_t projective_dimension_of_quotient(const BettiTable& table) {
  if (table.empty()) return 0;
  std::int64_t top = 0;
  for (const auto& [key, rank] : table.entries()) {
    if (key.first == 0 && key.second.is_one()) throw DomainError("R/I is zero for the unit ideal");
    top = std::max<std::int64_t>(top, key.first);
  }
  return top + 1;
}

std::int64_t projective_dimension_of_quotient(const MonomialIdeal& ideal, const FieldSpec& field,
                                              const OracleOptions& options) {
  if (ideal.is_unit()) throw DomainError("R/I is zero for the unit ideal");
  return projective_dimension_of_quotient(betti_table(ideal, field, options));
}

std::optional<std::string> linear_resolution_diagnostic(const MonomialIdeal& ideal,
                                                        const BettiTable& table) {
  if (ideal.is_zero()) return "zero ideal has no generator degree";
  if (!ideal.equigenerated()) {
    std::uint64_t lo = ideal.min_degree(), hi = lo;
    for (const auto& g : ideal.generators()) hi = std::max(hi, g.degree());
    return "generated in degrees " + std::to_string(lo) + ".." + std::to_string(hi);
  }
  const auto d = ideal.min_degree();
  for (const auto& [ij, rank] : table.graded())
    if (ij.second != ij.first + d)
      return "beta_{" + std::to_string(ij.first) + "," + std::to_string(ij.second) +
             "} = " + std::to_string(rank) + " off the linear strand";
  return std::nullopt;
}

bool has_linear_resolution(const MonomialIdeal& ideal, const BettiTable& table) {
  return !linear_resolution_diagnostic(ideal, table).has_value();
}

bool has_linear_resolution(const MonomialIdeal& ideal, const FieldSpec& field,
                           const OracleOptions& options) {
  if (ideal.is_zero() || !ideal.equigenerated()) return false;
  return has_linear_resolution(ideal, betti_table(ideal, field, options));
}

} // namespace pathideal
