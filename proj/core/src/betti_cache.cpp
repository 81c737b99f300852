#include "pathideal/betti_cache.hpp"

#include "pathideal/errors.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <unistd.h>

#include <json.hpp>
#include <openssl/evp.h>

namespace pathideal {
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

json table_to_json(const BettiTable& table) {
  json entries = json::array();
  for (const auto& [key, rank] : table.entries()) {
    const auto e = key.second.exponents();
    entries.push_back({{"i", key.first},
                       {"multidegree", std::vector<Exponent>(e.begin(), e.end())},
                       {"rank", rank}});
  }
  json graded = json::array();
  for (const auto& [ij, rank] : table.graded())
    graded.push_back({{"i", ij.first}, {"j", ij.second}, {"rank", rank}});
  // nlohmann::json objects keep keys sorted, which fixes the byte layout.
  return {{"ambient", table.ambient()},
          {"char", table.characteristic()},
          {"entries", std::move(entries)},
          {"graded", std::move(graded)}};
}

BettiTable table_from_json(const json& j) {
  BettiTable table(j.at("ambient").get<std::size_t>(), j.at("char").get<std::uint32_t>());
  for (const auto& e : j.at("entries")) {
    auto exps = e.at("multidegree").get<std::vector<Exponent>>();
    if (exps.size() != table.ambient()) throw AmbientMismatch(table.ambient(), exps.size());
    table.add(e.at("i").get<std::uint32_t>(), Monomial(std::move(exps)),
              e.at("rank").get<std::uint64_t>());
  }
  return table;
}

} // namespace

std::string to_json(const BettiTable& table) { return table_to_json(table).dump(); }

BettiTable betti_table_from_json(std::string_view text) {
  return table_from_json(json::parse(text.begin(), text.end()));
}

std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw Error("sha256 failed");
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 0xf];
  }
  return out;
}

std::string cache_key(const MonomialIdeal& ideal, const FieldSpec& field) {
  std::ostringstream os;
  os << "pathideal-betti-v1;ambient=" << ideal.ambient() << ";char=" << field.characteristic
     << ";gens=";
  for (const auto& g : ideal.generators()) {
    os << '[';
    for (auto e : g.exponents()) os << e << ',';
    os << ']';
  }
  return sha256_hex(os.str());
}

BettiCache::BettiCache(fs::path dir) : dir_(std::move(dir)) {
  if (dir_.empty()) return;
  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (ec || !fs::is_directory(dir_)) {
    disable("cannot create " + dir_.string() + (ec ? ": " + ec.message() : ""));
    return;
  }
  enabled_ = true;
}

fs::path BettiCache::default_dir() {
  if (const char* env = std::getenv("PATHIDEAL_CACHE"); env && *env) return env;
  return ".pathideal-cache";
}

fs::path BettiCache::entry_path(const std::string& key) const { return dir_ / (key + ".json"); }

void BettiCache::disable(const std::string& why) {
  enabled_ = false;
  if (!warned_.exchange(true))
    std::cerr << "pathideal: warning: Betti cache disabled (" << why << ")\n";
}

std::optional<BettiTable> BettiCache::lookup(const MonomialIdeal& ideal, const FieldSpec& field) {
  if (!enabled()) return std::nullopt;
  const auto key = cache_key(ideal, field);
  const auto path = entry_path(key);
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    ++misses_;
    return std::nullopt;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  in.close();
  try {
    const json doc = json::parse(buf.str());
    const auto payload = doc.at("table").dump();
    if (doc.at("key").get<std::string>() != key ||
        doc.at("sha256").get<std::string>() != sha256_hex(payload))
      throw Error("hash mismatch");
    auto table = table_from_json(doc.at("table"));
    if (table.characteristic() != field.characteristic || table.ambient() != ideal.ambient())
      throw Error("header mismatch");
    ++hits_;
    return table;
  } catch (const std::exception&) {
    std::error_code ec;
    fs::remove(path, ec);
    ++evictions_;
    ++misses_;
    return std::nullopt;
  }
}

void BettiCache::store(const MonomialIdeal& ideal, const FieldSpec& field,
                       const BettiTable& table) {
  if (!enabled()) return;
  const auto key = cache_key(ideal, field);
  const json payload = table_to_json(table);
  const json doc = {{"key", key}, {"sha256", sha256_hex(payload.dump())}, {"table", payload}};

  std::ostringstream tmp_name;
  tmp_name << key << ".tmp." << ::getpid() << "." << std::this_thread::get_id();
  const auto tmp = dir_ / tmp_name.str();
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << doc.dump() << '\n';
    if (!out) {
      disable("cannot write " + tmp.string());
      return;
    }
  }
  std::error_code ec;
  fs::rename(tmp, entry_path(key), ec);
  if (ec) {
    fs::remove(tmp, ec);
    disable("cannot rename into " + dir_.string());
  }
}

BettiTable BettiCache::get_or_compute(const MonomialIdeal& ideal, const FieldSpec& field,
                                      const OracleOptions& options) {
  if (auto cached = lookup(ideal, field)) return std::move(*cached);
  auto table = betti_table(ideal, field, options);
  store(ideal, field, table);
  return table;
}

} // namespace pathideal
