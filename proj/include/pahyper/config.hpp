#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pahyper/cardinality.hpp"
#include "pahyper/gen_g.hpp"
#include "pahyper/gen_h.hpp"

namespace pahyper {

/// Bad configuration: unknown key, malformed value, or parameters that fail
/// validation. The message names the key.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// `key = value` lines; '#' starts a comment. Lines of the form
/// `i1,i2,...,ik : prob` (0-based community indices) are profile entries.
/// Every key has to be consumed by some reader; leftovers are reported by
/// check_all_used().
class Config {
 public:
  static Config parse(std::istream& in, std::string source = "config");
  static Config load(const std::filesystem::path& path);

  bool has(const std::string& key) const { return entries_.count(key) != 0; }
  /// Overrides or adds a key (command-line flags).
  void set(const std::string& key, std::string value);

  std::optional<std::string> take(const std::string& key) const;
  std::string take_string(const std::string& key, std::optional<std::string> fallback = {}) const;
  double take_double(const std::string& key, std::optional<double> fallback = {}) const;
  std::uint64_t take_uint(const std::string& key, std::optional<std::uint64_t> fallback = {}) const;
  bool take_bool(const std::string& key, std::optional<bool> fallback = {}) const;
  std::vector<double> take_doubles(const std::string& key,
                                   std::optional<std::vector<double>> fallback = {}) const;
  CardinalityDistribution take_distribution(const std::string& key,
                                            std::optional<CardinalityDistribution> fallback = {}) const;
  /// Indexed keys `prefix.1`, `prefix.2`, ... up to the first gap.
  std::vector<std::string> indexed_keys(const std::string& prefix) const;

  bool has_profile() const { return !profile_.empty(); }
  const std::vector<std::pair<CommunitySet, double>>& take_profile() const;

  /// Throws ConfigError naming the first key nobody read.
  void check_all_used() const;

  const std::string& source() const { return source_; }

 private:
  struct Entry {
    std::string value;
    std::size_t line = 0;
    mutable bool used = false;
  };

  [[noreturn]] void fail(const std::string& key, const std::string& what) const;

  std::string source_;
  std::map<std::string, Entry> entries_;
  std::vector<std::pair<CommunitySet, double>> profile_;
  std::size_t first_profile_line_ = 0;
  mutable bool profile_used_ = false;
};

/// Keys: p_v, p_ve, p_e.1.., y, x.1.., m, gamma, cap, steps.
HParams hparams_from_config(const Config& cfg);

/// Keys: p, M (comma list), x.1.. or edge_size, gamma, steps, plus either
/// profile lines or `profile = diagonal:ALPHA`.
GParams gparams_from_config(const Config& cfg);

}  // namespace pahyper
