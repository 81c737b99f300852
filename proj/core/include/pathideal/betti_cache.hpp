#pragma once

#include "pathideal/monomial.hpp"
#include "pathideal/resolution.hpp"

#include <atomic>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace pathideal {

/// {"ambient", "char", "entries":[{i, multidegree, rank}], "graded":[{i, j, rank}]},
/// keys and rows in a fixed order so equal tables give equal bytes.
std::string to_json(const BettiTable& table);
BettiTable betti_table_from_json(std::string_view json);

std::string sha256_hex(std::string_view bytes);

/// Content hash of (ambient, generators, characteristic).
std::string cache_key(const MonomialIdeal& ideal, const FieldSpec& field);

/// On-disk store of Betti tables. Writes go to a temporary file that is then
/// renamed into place; entries whose payload hash does not verify are removed
/// and reported as misses. A cache constructed with an empty path is disabled.
class BettiCache {
public:
  BettiCache() = default;
  explicit BettiCache(std::filesystem::path dir);

  /// $PATHIDEAL_CACHE, else `.pathideal-cache`.
  static std::filesystem::path default_dir();

  bool enabled() const noexcept { return enabled_.load(); }
  const std::filesystem::path& dir() const noexcept { return dir_; }

  std::optional<BettiTable> lookup(const MonomialIdeal& ideal, const FieldSpec& field);
  void store(const MonomialIdeal& ideal, const FieldSpec& field, const BettiTable& table);
  BettiTable get_or_compute(const MonomialIdeal& ideal, const FieldSpec& field,
                            const OracleOptions& options = {});

  std::size_t hits() const noexcept { return hits_.load(); }
  std::size_t misses() const noexcept { return misses_.load(); }
  std::size_t evictions() const noexcept { return evictions_.load(); }

private:
  std::filesystem::path entry_path(const std::string& key) const;
  void disable(const std::string& why);

  std::filesystem::path dir_;
  std::atomic<bool> enabled_{false};
  std::atomic<bool> warned_{false};
  std::atomic<std::size_t> hits_{0}, misses_{0}, evictions_{0};
};

} // namespace pathideal
