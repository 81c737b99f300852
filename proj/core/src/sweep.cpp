#include "pathideal/sweep.hpp"

#include "pathideal/errors.hpp"
#include "pathideal/formulas.hpp"
#include "pathideal/linearity.hpp"
#include "pathideal/path_ideal.hpp"
#include "pathideal/text_io.hpp"
#include "pathideal/version.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <set>
#include <thread>

namespace pathideal {
namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

std::string str(const BigInt& v) { return v.str(); }
std::string str(std::int64_t v) { return std::to_string(v); }
std::string str(bool v) { return v ? "1" : "0"; }

std::string reproduce(const Cell& c, const SweepConfig& cfg) {
  const auto n = std::to_string(c.n), t = std::to_string(c.t), s = std::to_string(c.s);
  return "pathideal verify --n-min " + n + " --n-max " + n + " --t-min " + t + " --t-max " + t +
         " --s-min " + s + " --s-max " + s + " --char " + std::to_string(cfg.characteristic);
}

class CellRecorder {
public:
  CellRecorder(const Cell& cell, const SweepConfig& cfg) : cell_(cell), cfg_(cfg) {}

  CellRecord& add(std::string quantity, std::string formula, std::string oracle, bool ok,
                  Clock::time_point started, std::string detail = {}) {
    CellRecord r;
    r.n = cell_.n;
    r.t = cell_.t;
    r.s = cell_.s;
    r.quantity = std::move(quantity);
    r.formula = std::move(formula);
    r.oracle = std::move(oracle);
    r.status = ok ? Status::pass : Status::fail;
    r.ms = elapsed_ms(started);
    r.detail = std::move(detail);
    if (!ok) r.reproduce = reproduce(cell_, cfg_);
    records_.push_back(std::move(r));
    return records_.back();
  }

  std::vector<CellRecord> take() && { return std::move(records_); }

private:
  Cell cell_;
  const SweepConfig& cfg_;
  std::vector<CellRecord> records_;
};

std::vector<CellRecord> skipped_cell(const Cell& cell, const SweepConfig& cfg,
                                     const std::string& why) {
  std::vector<CellRecord> out;
  auto push = [&](std::string quantity, std::optional<std::string> formula) {
    CellRecord r;
    r.n = cell.n;
    r.t = cell.t;
    r.s = cell.s;
    r.quantity = std::move(quantity);
    r.formula = std::move(formula);
    r.status = Status::skipped;
    r.detail = why;
    r.reproduce = reproduce(cell, cfg);
    out.push_back(std::move(r));
  };
  if (cell.n >= cell.t) {
    push("generators", str(composition_count(cell.s, cell.n - cell.t + 1)));
    push("reg", str(formulas::reg_power(cell.n, cell.t, cell.s)));
  } else {
    push("reg", str(formulas::gamma(cell.n, cell.t)));
  }
  return out;
}

} // namespace

void SweepConfig::validate() const {
  if (t_min < 2 || t_min > t_max) throw DomainError("sweep t range must be nonempty with t >= 2");
  if (n_min < 1 || n_min > n_max) throw DomainError("sweep n range must be nonempty with n >= 1");
  if (s_min < 1 || s_min > s_max) throw DomainError("sweep s range must be nonempty with s >= 1");
  if (max_generators == 0 || lattice_cap == 0) throw DomainError("sweep caps must be positive");
  if (jobs == 0) throw DomainError("sweep needs at least one job");
  FieldSpec{characteristic};
}

std::string_view to_string(Status s) {
  switch (s) {
  case Status::pass: return "pass";
  case Status::fail: return "fail";
  case Status::skipped: return "skipped";
  case Status::discrepancy: return "discrepancy";
  }
  return "fail";
}

Status status_from_string(std::string_view s) {
  if (s == "pass") return Status::pass;
  if (s == "fail") return Status::fail;
  if (s == "skipped") return Status::skipped;
  if (s == "discrepancy") return Status::discrepancy;
  throw DomainError("unknown status '" + std::string(s) + "'");
}

std::vector<const CellRecord*> VerificationReport::find(std::string_view quantity_prefix) const {
  std::vector<const CellRecord*> out;
  for (const auto& r : records)
    if (r.quantity.starts_with(quantity_prefix)) out.push_back(&r);
  return out;
}

std::vector<Cell> sweep_cells(const SweepConfig& cfg) {
  std::vector<Cell> cells;
  for (std::uint32_t t = cfg.t_min; t <= cfg.t_max; ++t) {
    if (cfg.include_below_threshold && cfg.s_min <= 1)
      for (std::uint32_t n = cfg.n_min; n < t && n <= cfg.n_max; ++n) cells.push_back({n, t, 1});
    for (std::uint32_t n = std::max(cfg.n_min, t); n <= cfg.n_max; ++n)
      for (std::uint32_t s = cfg.s_min; s <= cfg.s_max; ++s) {
        if (s >= cfg.high_power_from && n > cfg.high_power_max_n) continue;
        cells.push_back({n, t, s});
      }
  }
  std::sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) {
    return std::tie(a.n, a.t, a.s) < std::tie(b.n, b.t, b.s);
  });
  return cells;
}

std::vector<CellRecord> run_cell(const Cell& cell, const SweepConfig& cfg, BettiCache& cache,
                                 bool& skipped) {
  skipped = false;
  const FieldSpec field{cfg.characteristic};
  const OracleOptions oracle{cfg.lattice_cap, 1};
  const PathIdealSpec spec(cell.n, cell.t);
  const std::int64_t n = cell.n, t = cell.t, s = cell.s;
  CellRecorder rec(cell, cfg);

  try {
    if (spec.is_zero()) {
      const auto t0 = Clock::now();
      const auto formula = formulas::gamma(n, t);
      const auto table = cache.get_or_compute(MonomialIdeal(spec.n), field, oracle);
      const auto reg = regularity_of_quotient(table);
      rec.add("reg", str(formula), str(reg), formula == reg, t0);
      return std::move(rec).take();
    }

    // Generators named by compositions versus the generic power.
    auto t0 = Clock::now();
    const auto named = power_generators(spec, cell.s, cfg.max_generators);
    std::vector<Monomial> named_monomials;
    for (const auto& g : named) named_monomials.push_back(g.monomial);
    const MonomialIdeal power = minimalize(spec.n, named_monomials);
    const MonomialIdeal generic = ideal_power(path_ideal(spec), cell.s, cfg.max_generators);
    {
      const std::set<Monomial> distinct(named_monomials.begin(), named_monomials.end());
      const auto expected = composition_count(s, n - t + 1);
      const bool ok = distinct.size() == named.size() && power.size() == named.size() &&
                      generic == power && BigInt(named.size()) == expected;
      std::string detail;
      if (distinct.size() != named.size()) detail = "products of generators collide";
      else if (power.size() != named.size()) detail = "some product is not minimal";
      else if (generic != power) detail = "generic power differs from named generators";
      rec.add("generators", str(expected), std::to_string(generic.size()), ok, t0, detail);
    }

    t0 = Clock::now();
    const auto table = cache.get_or_compute(power, field, oracle);
    {
      const auto formula = formulas::reg_power(n, t, s);
      const auto reg = regularity_of_quotient(table);
      rec.add("reg", str(formula), str(reg), formula == reg, t0);
    }

    const bool linear_range = n <= 2 * t;
    t0 = Clock::now();
    {
      const bool predicted = formulas::linear_resolution_predicate(n, t);
      const auto why = linear_resolution_diagnostic(power, table);
      rec.add("linear_resolution", str(predicted), str(!why.has_value()),
              predicted == !why.has_value(), t0, why.value_or(""));
    }

    t0 = Clock::now();
    {
      const auto order = quotient_order_sort(compositions(cell.s, spec.generator_count()));
      const auto result = linear_quotients_check(spec, cell.s, order);
      const auto* cert = std::get_if<QuotientCertificate>(&result);
      const bool valid = cert && cert->closed_form_mismatches.empty();
      std::string detail;
      if (const auto* fail = std::get_if<QuotientFailure>(&result))
        detail = "position " + std::to_string(fail->position) + " colon has non-variable generator";
      else if (!cert->closed_form_mismatches.empty())
        detail = "closed-form colon mismatch at position " +
                 std::to_string(cert->closed_form_mismatches.front());
      rec.add("linear_quotients", str(linear_range), str(valid), valid == linear_range, t0, detail);

      if (cert && linear_range) {
        const auto census = cert->census();
        for (std::int64_t k = 1; k <= n - t; ++k) {
          const auto formula = formulas::s_k_closed_form(n, t, s, k);
          const std::size_t count = static_cast<std::size_t>(k) < census.size() ? census[k] : 0;
          rec.add("S_" + std::to_string(k), str(formula), std::to_string(count),
                  formula == count, t0);
        }
      }
    }

    t0 = Clock::now();
    {
      const auto q = quasi_linear_check(power);
      std::string detail;
      if (q.witness) detail = "fails at " + to_text(q.witness->generator) + " with colon " + to_text(q.witness->colon);
      rec.add("quasi_linear", str(linear_range), str(q.quasi_linear),
              q.quasi_linear == linear_range, t0, detail);
    }

    if (!linear_range) {
      t0 = Clock::now();
      const auto w = quasi_linear_witness(spec, cell.s);
      const std::string found =
          w.variables.size() == 1 ? std::to_string(w.variables.front() + 1) : "none";
      rec.add("quasi_witness", std::to_string(n - t), found, w.confirmed(), t0,
              w.confirmed() ? "" : "obstruction facts not confirmed");
    }

    if (linear_range) {
      t0 = Clock::now();
      const auto totals = table.totals();
      for (std::int64_t i = 0; i <= n - t + 1; ++i) {
        const auto formula = formulas::betti_closed_form(n, t, s, i);
        const std::uint64_t got = static_cast<std::size_t>(i) < totals.size() ? totals[i] : 0;
        rec.add("betti_" + std::to_string(i), str(formula), std::to_string(got),
                formula == got, t0);
      }
      bool concentrated = true;
      for (const auto& [ij, rank] : table.graded())
        concentrated = concentrated && ij.second == ij.first + static_cast<std::uint64_t>(s * t);
      rec.add("betti_concentrated", "1", str(concentrated), concentrated, t0);

      const auto pd = formulas::pd_closed_form(n, t, s);
      const auto got = projective_dimension_of_quotient(table);
      rec.add("pd", str(pd), str(got), pd == got, t0);
    }

    if (cell.s >= 2) {
      t0 = Clock::now();
      const auto u = line_graph_generators(spec);
      const auto lhs = colon(power, u.back());
      const auto rhs = ideal_power(path_ideal(spec), cell.s - 1, cfg.max_generators);
      rec.add("colon_power", std::to_string(rhs.size()), std::to_string(lhs.size()), lhs == rhs,
              t0, lhs == rhs ? "" : "I^s : u_{n-t+1} differs from I^{s-1}");
    }

    const bool tail_cell = cell.s <= cfg.tail_max_power &&
                             (n >= 2 * t + 1 || (cfg.tail_linear_range && linear_range));
    if (tail_cell) {
      for (std::int64_t j = 2; j <= n - t + 1; ++j) {
        t0 = Clock::now();
        const auto ideal = power_plus_tail(spec, cell.s, static_cast<std::uint32_t>(j));
        const auto reg = regularity_of_quotient(cache.get_or_compute(ideal, field, oracle));
        const auto formula = n >= 2 * t + 1 ? formulas::tail_reg(n, t, s, j)
                                            : formulas::gamma(n, t) + t * (s - 1);
        auto& r = rec.add("tail_j" + std::to_string(j), str(formula), str(reg),
                          formula == reg, t0);
        if (n <= 2 * t) {
          // Outside the proven range: mismatches are reported, never failed.
          r.status = formula == reg ? Status::pass : Status::discrepancy;
          r.reproduce.clear();
          if (formula != reg) r.detail = "tail formula outside n >= 2t+1";
        }
      }
    }
  } catch (const CapExceeded& e) {
    skipped = true;
    return skipped_cell(cell, cfg, e.what());
  }
  return std::move(rec).take();
}

VerificationReport run_sweep(const SweepConfig& cfg) {
  cfg.validate();
  const auto cells = sweep_cells(cfg);
  BettiCache cache(cfg.cache_dir);

  std::vector<std::vector<CellRecord>> per_cell(cells.size());
  std::vector<char> skipped(cells.size(), 0);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      bool was_skipped = false;
      per_cell[i] = run_cell(cells[i], cfg, cache, was_skipped);
      skipped[i] = was_skipped;
    }
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(cfg.jobs, cells.size()));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(worker);
  }

  VerificationReport report;
  report.fingerprint = {std::string(kVersion), cfg.characteristic, cfg.max_generators,
                        cfg.lattice_cap};
  report.summary.cells = cells.size();
  for (std::size_t i = 0; i < cells.size(); ++i) {
    report.summary.skipped += skipped[i] ? 1 : 0;
    for (auto& r : per_cell[i]) report.records.push_back(std::move(r));
  }
  std::stable_sort(report.records.begin(), report.records.end(),
                   [](const CellRecord& a, const CellRecord& b) {
                     return std::tie(a.n, a.t, a.s, a.quantity) <
                            std::tie(b.n, b.t, b.s, b.quantity);
                   });
  for (const auto& r : report.records) {
    ++report.summary.records;
    switch (r.status) {
    case Status::pass: ++report.summary.pass; break;
    case Status::fail: ++report.summary.fail; break;
    case Status::skipped: ++report.summary.skipped_records; break;
    case Status::discrepancy: ++report.summary.discrepancy; break;
    }
  }
  return report;
}

} // namespace pathideal
