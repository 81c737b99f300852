#include "pathideal/errors.hpp"
#include "pathideal/sweep.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>

#include <json.hpp>

namespace pathideal {
using nlohmann::ordered_json;

namespace {

// Integers that fit in 64 bits are written as JSON numbers, anything else as
// strings; both read back to the same decimal text.
ordered_json value_json(const std::optional<std::string>& v) {
  if (!v) return nullptr;
  std::int64_t x = 0;
  auto [ptr, ec] = std::from_chars(v->data(), v->data() + v->size(), x);
  if (ec == std::errc{} && ptr == v->data() + v->size()) return x;
  return *v;
}

std::optional<std::string> value_from_json(const ordered_json& j) {
  if (j.is_null()) return std::nullopt;
  if (j.is_string()) return j.get<std::string>();
  return std::to_string(j.get<std::int64_t>());
}

std::string format_ms(double ms) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", ms);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

} // namespace

std::string report_to_json(const VerificationReport& report, bool with_timing) {
  ordered_json records = ordered_json::array();
  for (const auto& r : report.records) {
    ordered_json j;
    j["n"] = r.n;
    j["t"] = r.t;
    j["s"] = r.s;
    j["quantity"] = r.quantity;
    j["formula"] = value_json(r.formula);
    j["oracle"] = value_json(r.oracle);
    j["status"] = to_string(r.status);
    if (with_timing) j["ms"] = r.ms;
    if (!r.detail.empty()) j["detail"] = r.detail;
    if (!r.reproduce.empty()) j["reproduce"] = r.reproduce;
    records.push_back(std::move(j));
  }
  const auto& sm = report.summary;
  ordered_json doc;
  doc["fingerprint"] = {{"version", report.fingerprint.version},
                        {"char", report.fingerprint.characteristic},
                        {"max_generators", report.fingerprint.max_generators},
                        {"lattice_cap", report.fingerprint.lattice_cap}};
  doc["summary"] = {{"cells", sm.cells},     {"records", sm.records},
                    {"pass", sm.pass},       {"fail", sm.fail},
                    {"skipped", sm.skipped}, {"skipped_records", sm.skipped_records},
                    {"discrepancy", sm.discrepancy}};
  doc["records"] = std::move(records);
  return doc.dump(2) + "\n";
}

VerificationReport report_from_json(std::string_view text) {
  const auto doc = ordered_json::parse(text.begin(), text.end());
  VerificationReport report;
  const auto& fp = doc.at("fingerprint");
  report.fingerprint = {fp.at("version").get<std::string>(), fp.at("char").get<std::uint32_t>(),
                        fp.at("max_generators").get<std::size_t>(),
                        fp.at("lattice_cap").get<std::size_t>()};
  const auto& sm = doc.at("summary");
  report.summary = {sm.at("cells").get<std::size_t>(),   sm.at("records").get<std::size_t>(),
                    sm.at("pass").get<std::size_t>(),    sm.at("fail").get<std::size_t>(),
                    sm.at("skipped").get<std::size_t>(), sm.at("skipped_records").get<std::size_t>(),
                    sm.at("discrepancy").get<std::size_t>()};
  for (const auto& j : doc.at("records")) {
    CellRecord r;
    r.n = j.at("n").get<std::uint32_t>();
    r.t = j.at("t").get<std::uint32_t>();
    r.s = j.at("s").get<std::uint32_t>();
    r.quantity = j.at("quantity").get<std::string>();
    r.formula = value_from_json(j.at("formula"));
    r.oracle = value_from_json(j.at("oracle"));
    r.status = status_from_string(j.at("status").get<std::string>());
    r.ms = j.value("ms", 0.0);
    r.detail = j.value("detail", std::string{});
    r.reproduce = j.value("reproduce", std::string{});
    report.records.push_back(std::move(r));
  }
  return report;
}

std::string report_to_csv(const VerificationReport& report) {
  std::string out = "n,t,s,quantity,formula,oracle,status,ms\n";
  for (const auto& r : report.records) {
    out += std::to_string(r.n) + ',' + std::to_string(r.t) + ',' + std::to_string(r.s) + ',' +
           csv_field(r.quantity) + ',' + r.formula.value_or("") + ',' + r.oracle.value_or("") +
           ',' + std::string(to_string(r.status)) + ',' + format_ms(r.ms) + '\n';
  }
  return out;
}

void emit_table(const VerificationReport& report, TableFormat format,
                const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  out << (format == TableFormat::csv ? report_to_csv(report) : report_to_json(report));
  out.flush();
  if (!out) throw Error("write failed for " + path.string());
}

} // namespace pathideal
