// pathideal: powers of t-path ideals of line graphs.
//
//   gens      generators of I_t(L_n)^s named by compositions
//   power     minimal generators of I^s from generic ideal multiplication
//   betti     Betti table of I^s (or of --ideal) from the homology oracle
//   reg       oracle regularity of R/I^s next to the closed form
//   check     linear-quotient and quasi-linearity checks
//   formula   closed-form values (reg, betti, pd, gamma)
//   verify    formula-vs-oracle sweep; exit status 1 on any failure
//   table     re-emit a sweep report as CSV or JSON

#include "pathideal/betti_cache.hpp"
#include "pathideal/errors.hpp"
#include "pathideal/formulas.hpp"
#include "pathideal/linearity.hpp"
#include "pathideal/path_ideal.hpp"
#include "pathideal/resolution.hpp"
#include "pathideal/sweep.hpp"
#include "pathideal/text_io.hpp"
#include "pathideal/version.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace {

using namespace pathideal;
using nlohmann::ordered_json;

struct Globals {
  std::uint32_t characteristic = 2;
  std::string cache_dir;
  unsigned jobs = 1;
};

struct IdealArgs {
  std::uint32_t n = 0, t = 0, s = 1;
  std::string ideal_text;
  std::uint32_t vars = 0;
};

ordered_json exponents_json(const Monomial& m) {
  const auto e = m.exponents();
  return std::vector<Exponent>(e.begin(), e.end());
}

ordered_json ideal_json(const MonomialIdeal& ideal) {
  ordered_json gens = ordered_json::array();
  for (const auto& g : ideal.generators()) gens.push_back(exponents_json(g));
  return {{"ambient", ideal.ambient()}, {"generators", std::move(gens)}};
}

std::string support_text(const Support& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ", ";
    out += "x" + std::to_string(s.indices()[i] + 1);
  }
  return out + ")";
}

std::string parts_text(const Composition& c) {
  std::string out = "(";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(c.parts[i]);
  }
  return out + ")";
}

BettiCache open_cache(const Globals& g) {
  return BettiCache(g.cache_dir.empty() ? BettiCache::default_dir()
                                        : std::filesystem::path(g.cache_dir));
}

MonomialIdeal resolve_ideal(const IdealArgs& a) {
  if (!a.ideal_text.empty()) {
    if (a.vars == 0) throw DomainError("--ideal needs --vars");
    return parse_ideal(a.ideal_text, a.vars);
  }
  if (a.n == 0 || a.t == 0) throw DomainError("give --n and --t, or --ideal with --vars");
  const PathIdealSpec spec(a.n, a.t);
  if (spec.is_zero()) return MonomialIdeal(spec.n);
  std::vector<Monomial> gens;
  for (auto& g : power_generators(spec, a.s)) gens.push_back(std::move(g.monomial));
  return minimalize(spec.n, std::move(gens));
}

void print_betti(std::ostream& os, const BettiTable& table) {
  const auto graded = table.graded();
  const auto totals = table.totals();
  if (totals.empty()) {
    os << "zero ideal: empty Betti table\n";
    return;
  }
  std::map<std::int64_t, std::map<std::uint32_t, std::uint64_t>> rows;
  for (const auto& [ij, rank] : graded)
    rows[static_cast<std::int64_t>(ij.second) - ij.first][ij.first] = rank;
  const int w = 6;
  os << std::setw(8) << "";
  for (std::size_t i = 0; i < totals.size(); ++i) os << std::setw(w) << i;
  os << "\n" << std::setw(8) << "total:";
  for (auto v : totals) os << std::setw(w) << v;
  os << "\n";
  for (const auto& [shift, cols] : rows) {
    os << std::setw(7) << shift << ":";
    for (std::uint32_t i = 0; i < totals.size(); ++i) {
      auto it = cols.find(i);
      os << std::setw(w) << (it == cols.end() ? std::string(".") : std::to_string(it->second));
    }
    os << "\n";
  }
}

void add_ideal_options(CLI::App* cmd, IdealArgs& a, bool needs_power) {
  cmd->add_option("--n", a.n, "Number of vertices of the line graph");
  cmd->add_option("--t", a.t, "Path length (vertices per path)");
  auto* p = cmd->add_option("--power", a.s, "Power s")->check(CLI::PositiveNumber);
  if (needs_power) p->default_val(1);
}

void add_sweep_options(CLI::App* cmd, SweepConfig& c) {
  cmd->add_option("--t-min", c.t_min, "Smallest path length")->capture_default_str();
  cmd->add_option("--t-max", c.t_max, "Largest path length")->capture_default_str();
  cmd->add_option("--n-min", c.n_min, "Smallest vertex count (raised to t per row)")->capture_default_str();
  cmd->add_option("--n-max", c.n_max, "Largest vertex count")->capture_default_str();
  cmd->add_option("--s-min", c.s_min, "Smallest power")->capture_default_str();
  cmd->add_option("--s-max", c.s_max, "Largest power")->capture_default_str();
  cmd->add_option("--high-power-from", c.high_power_from,
                  "Powers from this value on are limited to n <= --high-power-max-n")
      ->capture_default_str();
  cmd->add_option("--high-power-max-n", c.high_power_max_n, "Vertex limit for high powers")->capture_default_str();
  cmd->add_option("--below-threshold", c.include_below_threshold,
                  "Include n < t cells at s = 1")
      ->capture_default_str();
  cmd->add_option("--tail-max-power", c.tail_max_power, "Largest power for tail ideals (I^s, u_{n-t+1}, ..., u_j)")->capture_default_str();
  cmd->add_option("--tail-linear-range", c.tail_linear_range, "Also report tail ideals for t <= n <= 2t")->capture_default_str();
  cmd->add_option("--max-generators", c.max_generators, "Cap on |G(I^s)|")->capture_default_str();
  cmd->add_option("--lattice-cap", c.lattice_cap, "Cap on the lcm lattice size")->capture_default_str();
}

void finish_sweep_config(SweepConfig& c, const Globals& g) {
  c.characteristic = g.characteristic;
  c.jobs = g.jobs;
  c.cache_dir = g.cache_dir.empty() ? BettiCache::default_dir() : std::filesystem::path(g.cache_dir);
}

int run(int argc, char** argv) {
  CLI::App app{"pathideal: powers of t-path ideals of line graphs"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(kVersion));

  Globals g;
  app.add_option("--char", g.characteristic, "Field characteristic (prime)")
      ->capture_default_str();
  app.add_option("--cache", g.cache_dir, "Betti cache directory")
      ->envname("PATHIDEAL_CACHE");
  app.add_option("--jobs", g.jobs, "Worker threads")->check(CLI::PositiveNumber);
  app.set_config("--config", "", "TOML/INI-style key = value file; flags override it");

  // gens
  IdealArgs gens_args;
  bool gens_json = false;
  auto* gens = app.add_subcommand("gens", "Generators u^a of I_t(L_n)^s");
  add_ideal_options(gens, gens_args, true);
  gens->add_flag("--json", gens_json, "Composition JSON output");

  // power
  IdealArgs power_args;
  bool power_json = false;
  auto* power = app.add_subcommand("power", "Minimal generators of I^s by ideal multiplication");
  add_ideal_options(power, power_args, true);
  power->add_flag("--json", power_json, "JSON object {ambient, generators as exponent vectors}");

  // betti
  IdealArgs betti_args;
  std::string betti_json;
  auto* betti = app.add_subcommand("betti", "Betti table from the homology oracle");
  add_ideal_options(betti, betti_args, true);
  betti->add_option("--ideal", betti_args.ideal_text, "Explicit generators, e.g. \"x1*x2, x2*x3\"");
  betti->add_option("--vars", betti_args.vars, "Ambient variable count for --ideal");
  betti->add_option("--json", betti_json, "Write BettiTable JSON to this path ('-' for stdout)")
      ->expected(0, 1)
      ->default_str("-");

  // reg
  IdealArgs reg_args;
  bool reg_json = false;
  auto* reg = app.add_subcommand("reg", "Oracle regularity of R/I^s and the closed form");
  add_ideal_options(reg, reg_args, true);
  reg->add_option("--ideal", reg_args.ideal_text, "Explicit generators");
  reg->add_option("--vars", reg_args.vars, "Ambient variable count for --ideal");
  reg->add_flag("--json", reg_json, "JSON object {oracle, formula}");

  // check
  IdealArgs check_args;
  std::string check_mode = "both";
  bool check_json = false;
  auto* check = app.add_subcommand("check", "Linear quotients / quasi-linearity of I^s");
  add_ideal_options(check, check_args, true);
  check->add_option("--mode", check_mode, "Which property to test")
      ->check(CLI::IsMember({"quotients", "quasi", "both"}))
      ->capture_default_str();
  check->add_flag("--json", check_json, "JSON result with witnesses");

  // formula
  std::string formula_name;
  std::int64_t f_n = 0, f_t = 0, f_s = 1, f_i = 0;
  bool formula_json = false;
  auto* formula = app.add_subcommand("formula", "Closed-form values");
  formula->add_option("name", formula_name, "reg | betti | pd | gamma")
      ->required()
      ->check(CLI::IsMember({"reg", "betti", "pd", "gamma"}));
  formula->add_option("--n", f_n, "Number of vertices")->required();
  formula->add_option("--t", f_t, "Path length")->required();
  formula->add_option("--power", f_s, "Power s")->capture_default_str();
  formula->add_option("--i", f_i, "Homological index for betti")->capture_default_str();
  formula->add_flag("--json", formula_json, "JSON object {value, inputs}");

  // verify
  SweepConfig verify_cfg;
  std::string verify_report, verify_csv;
  bool verify_quiet = false;
  auto* verify = app.add_subcommand("verify", "Run the formula-vs-oracle sweep");
  add_sweep_options(verify, verify_cfg);
  verify->add_option("--report", verify_report, "Write the JSON report here");
  verify->add_option("--csv", verify_csv, "Write the CSV table here");
  verify->add_flag("--quiet", verify_quiet, "Only print the summary");

  // table
  SweepConfig table_cfg;
  std::string table_from, table_out = "-", table_format = "csv";
  auto* table = app.add_subcommand("table", "Emit a sweep report as CSV or JSON");
  add_sweep_options(table, table_cfg);
  table->add_option("--from", table_from, "Read this JSON report instead of running a sweep");
  table->add_option("--format", table_format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  table->add_option("--out", table_out, "Output path ('-' for stdout)")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Help and version requests exit 0; usage errors share the bad-input code.
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  FieldSpec field{g.characteristic};

  if (gens->parsed()) {
    const PathIdealSpec spec(gens_args.n, gens_args.t);
    if (spec.is_zero()) {
      std::cout << (gens_json ? "[]\n" : "(0)\n");
      return 0;
    }
    const auto list = power_generators(spec, gens_args.s);
    if (gens_json) {
      ordered_json out = ordered_json::array();
      for (const auto& pg : list)
        out.push_back({{"parts", pg.composition.parts}, {"monomial", exponents_json(pg.monomial)}});
      std::cout << out.dump() << "\n";
    } else {
      for (const auto& pg : list)
        std::cout << parts_text(pg.composition) << "  " << to_text(pg.monomial) << "\n";
    }
    return 0;
  }

  if (power->parsed()) {
    const PathIdealSpec spec(power_args.n, power_args.t);
    const auto ideal = spec.is_zero() ? MonomialIdeal(spec.n)
                                      : ideal_power(path_ideal(spec), power_args.s);
    if (power_json) {
      std::cout << ideal_json(ideal).dump() << "\n";
    } else {
      std::cout << ideal.size() << " minimal generators\n";
      for (const auto& m : ideal.generators()) std::cout << to_text(m) << "\n";
    }
    return 0;
  }

  if (betti->parsed()) {
    const auto ideal = resolve_ideal(betti_args);
    auto cache = open_cache(g);
    const auto tbl = cache.get_or_compute(ideal, field, OracleOptions{200'000, g.jobs});
    if (betti->count("--json") > 0) {
      const auto text = to_json(tbl);
      if (betti_json.empty() || betti_json == "-") {
        std::cout << text << "\n";
      } else {
        std::ofstream out(betti_json);
        out << text << "\n";
        if (!out) throw Error("cannot write " + betti_json);
      }
    } else {
      std::cout << "I = " << to_text(ideal) << " over GF(" << g.characteristic << ")\n";
      print_betti(std::cout, tbl);
    }
    return 0;
  }

  if (reg->parsed()) {
    const auto ideal = resolve_ideal(reg_args);
    auto cache = open_cache(g);
    const auto tbl = cache.get_or_compute(ideal, field, OracleOptions{200'000, g.jobs});
    const auto oracle = regularity_of_quotient(tbl);
    std::optional<std::int64_t> closed;
    if (reg_args.ideal_text.empty()) {
      if (reg_args.n < reg_args.t) closed = formulas::gamma(reg_args.n, reg_args.t);
      else if (reg_args.t >= 2) closed = formulas::reg_power(reg_args.n, reg_args.t, reg_args.s);
    }
    if (reg_json) {
      ordered_json out = {{"oracle", oracle}};
      out["formula"] = closed ? ordered_json(*closed) : ordered_json(nullptr);
      std::cout << out.dump() << "\n";
    } else {
      std::cout << "reg R/I oracle over GF(" << g.characteristic << "): " << oracle << "\n";
      if (closed) std::cout << "reg R/I closed form: " << *closed << "\n";
    }
    return closed && *closed != oracle ? 1 : 0;
  }

  if (check->parsed()) {
    const PathIdealSpec spec(check_args.n, check_args.t);
    if (spec.is_zero()) throw DomainError("check needs n >= t");
    ordered_json out;
    if (check_mode != "quasi") {
      const auto order = quotient_order_sort(compositions(check_args.s, spec.generator_count()));
      const auto result = linear_quotients_check(spec, check_args.s, order);
      if (const auto* cert = std::get_if<QuotientCertificate>(&result)) {
        ordered_json steps = ordered_json::array();
        for (std::size_t j = 0; j < cert->order.size(); ++j) {
          ordered_json vars = ordered_json::array();
          for (auto k : cert->colon_variables[j].indices()) vars.push_back("x" + std::to_string(k + 1));
          steps.push_back({{"parts", cert->order[j].parts}, {"colon", vars}, {"r", cert->r[j]}});
        }
        out["linear_quotients"] = {{"ok", true},
                                   {"closed_form_checked", cert->closed_form_checked},
                                   {"closed_form_mismatches", cert->closed_form_mismatches},
                                   {"steps", steps}};
        if (!check_json) {
          std::cout << "linear quotients: yes (" << cert->order.size() << " generators)\n";
          for (std::size_t j = 1; j < cert->order.size(); ++j)
            std::cout << "  " << parts_text(cert->order[j]) << "  colon "
                      << support_text(cert->colon_variables[j]) << "\n";
          if (cert->closed_form_checked)
            std::cout << "  closed-form colons: "
                      << (cert->closed_form_mismatches.empty() ? "all match" : "MISMATCH") << "\n";
        }
      } else {
        const auto& f = std::get<QuotientFailure>(result);
        out["linear_quotients"] = {{"ok", false},
                                   {"position", f.position},
                                   {"generator", to_text(f.generator)},
                                   {"colon", to_text(f.colon)},
                                   {"offending", to_text(f.offending)}};
        if (!check_json)
          std::cout << "linear quotients: no (descending order fails at position " << f.position
                    << ", " << to_text(f.generator) << ": colon " << to_text(f.colon) << ")\n";
      }
    }
    if (check_mode != "quotients") {
      std::vector<Monomial> gs;
      for (auto& pg : power_generators(spec, check_args.s)) gs.push_back(std::move(pg.monomial));
      const auto q = quasi_linear_check(minimalize(spec.n, std::move(gs)));
      ordered_json qj = {{"quasi_linear", q.quasi_linear}};
      if (q.witness)
        qj["witness"] = {{"generator", to_text(q.witness->generator)},
                         {"colon", to_text(q.witness->colon)},
                         {"offending", to_text(q.witness->offending)}};
      if (spec.n >= 2 * spec.t + 1) {
        const auto w = quasi_linear_witness(spec, check_args.s);
        qj["obstruction"] = {{"alpha", to_text(w.alpha)},
                             {"colon", to_text(w.colon)},
                             {"expected_variable", "x" + std::to_string(w.expected_variable + 1)},
                             {"unique_variable_is_expected", w.unique_variable_is_expected},
                             {"expected_variable_misses_u1_power", w.expected_variable_misses_u1_power},
                             {"confirmed", w.confirmed()}};
        if (!check_json)
          std::cout << "obstruction at " << to_text(w.alpha) << ": colon " << to_text(w.colon)
                    << (w.confirmed() ? " (confirmed)" : " (NOT confirmed)") << "\n";
      }
      out["quasi"] = qj;
      if (!check_json) {
        std::cout << "quasi-linear: " << (q.quasi_linear ? "yes" : "no");
        if (q.witness)
          std::cout << " (fails at " << to_text(q.witness->generator) << ", colon "
                    << to_text(q.witness->colon) << ")";
        std::cout << "\n";
      }
    }
    if (check_json) std::cout << out.dump() << "\n";
    return 0;
  }

  if (formula->parsed()) {
    std::string value;
    if (formula_name == "gamma") value = std::to_string(formulas::gamma(f_n, f_t));
    else if (formula_name == "reg") value = std::to_string(formulas::reg_power(f_n, f_t, f_s));
    else if (formula_name == "pd") value = std::to_string(formulas::pd_closed_form(f_n, f_t, f_s));
    else value = formulas::betti_closed_form(f_n, f_t, f_s, f_i).str();
    if (formula_json) {
      ordered_json inputs = {{"n", f_n}, {"t", f_t}};
      if (formula_name != "gamma") inputs["s"] = f_s;
      if (formula_name == "betti") inputs["i"] = f_i;
      // Values are exact; very large Betti numbers stay strings.
      ordered_json v;
      try {
        v = std::stoll(value);
      } catch (const std::out_of_range&) {
        v = value;
      }
      std::cout << ordered_json{{"value", v}, {"inputs", inputs}}.dump() << "\n";
    } else {
      std::cout << value << "\n";
    }
    return 0;
  }

  if (verify->parsed()) {
    finish_sweep_config(verify_cfg, g);
    const auto report = run_sweep(verify_cfg);
    if (!verify_quiet)
      for (const auto& r : report.records)
        if (r.status != Status::pass)
          std::cout << to_string(r.status) << ": n=" << r.n << " t=" << r.t << " s=" << r.s << " "
                    << r.quantity << " formula=" << r.formula.value_or("") << " oracle="
                    << r.oracle.value_or("") << (r.detail.empty() ? "" : " (" + r.detail + ")")
                    << (r.reproduce.empty() ? "" : "\n  reproduce: " + r.reproduce) << "\n";
    const auto& sm = report.summary;
    std::cout << "cells " << sm.cells << ", records " << sm.records << ": " << sm.pass << " pass, "
              << sm.fail << " fail, " << sm.skipped << " skipped cells, " << sm.discrepancy
              << " discrepancies (GF(" << verify_cfg.characteristic << "))\n";
    if (!verify_report.empty()) emit_table(report, TableFormat::json, verify_report);
    if (!verify_csv.empty()) emit_table(report, TableFormat::csv, verify_csv);
    return report.ok() ? 0 : 1;
  }

  if (table->parsed()) {
    VerificationReport report;
    if (!table_from.empty()) {
      std::ifstream in(table_from);
      if (!in) throw Error("cannot read " + table_from);
      std::stringstream buf;
      buf << in.rdbuf();
      report = report_from_json(buf.str());
    } else {
      finish_sweep_config(table_cfg, g);
      report = run_sweep(table_cfg);
    }
    const auto fmt = table_format == "csv" ? TableFormat::csv : TableFormat::json;
    if (table_out == "-") std::cout << (fmt == TableFormat::csv ? report_to_csv(report) : report_to_json(report));
    else emit_table(report, fmt, table_out);
    return 0;
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  std::cout << std::unitbuf;
  try {
    return run(argc, argv);
  } catch (const pathideal::Error& e) {
    std::cerr << "pathideal: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "pathideal: unexpected error: " << e.what() << "\n";
    return 2;
  }
}
