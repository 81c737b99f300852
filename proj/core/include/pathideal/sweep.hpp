#pragma once

#include "pathideal/betti_cache.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pathideal {

/// Parameter grid and limits for a formula-vs-oracle sweep. The defaults are
/// the desk envelope: t in [2,4], n in [t,9], s in [1,3] with s = 3 only for
/// n <= 7, plus the n < t cells at s = 1.
struct SweepConfig {
  std::uint32_t t_min = 2, t_max = 4;
  /// n runs over [max(n_min, t), n_max] for each t.
  std::uint32_t n_min = 1, n_max = 9;
  std::uint32_t s_min = 1, s_max = 3;
  /// Cells with s >= high_power_from only run when n <= high_power_max_n.
  std::uint32_t high_power_from = 3, high_power_max_n = 7;
  /// Add s = 1 cells for n_min <= n < t (zero ideal, regularity 0).
  bool include_below_threshold = true;
  /// Tail ideals (I^s, u_{n-t+1}, ..., u_j) are checked for s <= this.
  std::uint32_t tail_max_power = 2;
  /// Also evaluate the tail formula on t <= n <= 2t, reporting mismatches as
  /// discrepancies instead of failures.
  bool tail_linear_range = true;

  std::uint32_t characteristic = 2;
  std::size_t max_generators = 20'000;
  std::size_t lattice_cap = 200'000;
  unsigned jobs = 1;
  /// Empty disables the Betti cache.
  std::filesystem::path cache_dir;

  void validate() const;
};

enum class Status { pass, fail, skipped, discrepancy };

std::string_view to_string(Status s);
Status status_from_string(std::string_view s);

/// One compared quantity within one (n, t, s) cell. Values are exact integers
/// kept in decimal text; an absent oracle value means it was not computed.
struct CellRecord {
  std::uint32_t n = 0, t = 0, s = 0;
  std::string quantity;
  std::optional<std::string> formula;
  std::optional<std::string> oracle;
  Status status = Status::pass;
  double ms = 0.0;
  std::string detail;
  std::string reproduce;

  friend bool operator==(const CellRecord&, const CellRecord&) = default;
};

struct ReportSummary {
  std::size_t cells = 0;
  std::size_t records = 0;
  std::size_t pass = 0;
  std::size_t fail = 0;
  /// Cells abandoned because a size cap was exceeded.
  std::size_t skipped = 0;
  std::size_t skipped_records = 0;
  std::size_t discrepancy = 0;

  friend bool operator==(const ReportSummary&, const ReportSummary&) = default;
};

struct Fingerprint {
  std::string version;
  std::uint32_t characteristic = 2;
  std::size_t max_generators = 0;
  std::size_t lattice_cap = 0;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

struct VerificationReport {
  std::vector<CellRecord> records;
  ReportSummary summary;
  Fingerprint fingerprint;

  bool ok() const noexcept { return summary.fail == 0; }
  std::vector<const CellRecord*> find(std::string_view quantity_prefix) const;

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// All (n, t, s) cells the config covers, in report order.
struct Cell {
  std::uint32_t n, t, s;
};
std::vector<Cell> sweep_cells(const SweepConfig& cfg);

VerificationReport run_sweep(const SweepConfig& cfg);

/// Records for one cell; `cache` may be disabled.
std::vector<CellRecord> run_cell(const Cell& cell, const SweepConfig& cfg, BettiCache& cache,
                                 bool& skipped);

enum class TableFormat { csv, json };

/// JSON mirrors VerificationReport. `with_timing = false` drops the ms fields,
/// giving the canonical form used for determinism comparisons.
std::string report_to_json(const VerificationReport& report, bool with_timing = true);
VerificationReport report_from_json(std::string_view json);
/// Header `n,t,s,quantity,formula,oracle,status,ms`.
std::string report_to_csv(const VerificationReport& report);

/// Writes the report to `path`; throws Error naming the path on I/O failure.
void emit_table(const VerificationReport& report, TableFormat format,
                const std::filesystem::path& path);

} // namespace pathideal
