#include "pahyper/config.hpp"

#include <cctype>
#include <fstream>
#include <istream>

#include "pahyper/text.hpp"

namespace pahyper {

namespace {

bool looks_like_profile_line(std::string_view text) {
  return !text.empty() && std::isdigit(static_cast<unsigned char>(text.front())) &&
         text.find(':') != std::string_view::npos && text.find('=') == std::string_view::npos;
}

}  // namespace

Config Config::parse(std::istream& in, std::string source) {
  Config cfg;
  cfg.source_ = std::move(source);
  std::string raw;
  for (std::size_t lineno = 1; std::getline(in, raw); ++lineno) {
    std::string_view text = raw;
    if (const auto hash = text.find('#'); hash != std::string_view::npos) text = text.substr(0, hash);
    text = trim(text);
    if (text.empty()) continue;
    const std::string where = cfg.source_ + ":" + std::to_string(lineno);

    if (looks_like_profile_line(text)) {
      const auto colon = text.find(':');
      CommunitySet set;
      try {
        for (auto piece : split(text.substr(0, colon), ',')) set.push_back(parse_number<CommunityId>(piece));
        const double prob = parse_number<double>(text.substr(colon + 1));
        cfg.profile_.emplace_back(std::move(set), prob);
      } catch (const std::invalid_argument& e) {
        throw ConfigError(where + ": malformed profile line: " + e.what());
      }
      if (cfg.first_profile_line_ == 0) cfg.first_profile_line_ = lineno;
      continue;
    }

    const auto eq = text.find('=');
    if (eq == std::string_view::npos) throw ConfigError(where + ": expected 'key = value'");
    const std::string key(trim(text.substr(0, eq)));
    const std::string value(trim(text.substr(eq + 1)));
    if (key.empty()) throw ConfigError(where + ": empty key");
    if (cfg.entries_.count(key)) throw ConfigError(where + ": key '" + key + "' given twice");
    cfg.entries_[key] = Entry{value, lineno};
  }
  return cfg;
}

Config Config::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config " + path.string());
  return parse(in, path.string());
}

void Config::set(const std::string& key, std::string value) { entries_[key] = Entry{std::move(value), 0}; }

void Config::fail(const std::string& key, const std::string& what) const {
  auto it = entries_.find(key);
  std::string where = source_;
  if (it != entries_.end() && it->second.line) where += ":" + std::to_string(it->second.line);
  throw ConfigError(where + ": key '" + key + "': " + what);
}

std::optional<std::string> Config::take(const std::string& key) const {
  auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  it->second.used = true;
  return it->second.value;
}

std::string Config::take_string(const std::string& key, std::optional<std::string> fallback) const {
  if (auto v = take(key)) return *v;
  if (fallback) return *fallback;
  fail(key, "required key is missing");
}

double Config::take_double(const std::string& key, std::optional<double> fallback) const {
  const auto v = take(key);
  if (!v) {
    if (fallback) return *fallback;
    fail(key, "required key is missing");
  }
  try {
    return parse_number<double>(*v);
  } catch (const std::invalid_argument& e) {
    fail(key, e.what());
  }
}

std::uint64_t Config::take_uint(const std::string& key, std::optional<std::uint64_t> fallback) const {
  const auto v = take(key);
  if (!v) {
    if (fallback) return *fallback;
    fail(key, "required key is missing");
  }
  try {
    return parse_number<std::uint64_t>(*v);
  } catch (const std::invalid_argument& e) {
    fail(key, e.what());
  }
}

bool Config::take_bool(const std::string& key, std::optional<bool> fallback) const {
  const auto v = take(key);
  if (!v) {
    if (fallback) return *fallback;
    fail(key, "required key is missing");
  }
  if (*v == "true" || *v == "1" || *v == "on" || *v == "yes") return true;
  if (*v == "false" || *v == "0" || *v == "off" || *v == "no") return false;
  fail(key, "expected true or false, got '" + *v + "'");
}

std::vector<double> Config::take_doubles(const std::string& key,
                                         std::optional<std::vector<double>> fallback) const {
  const auto v = take(key);
  if (!v) {
    if (fallback) return *fallback;
    fail(key, "required key is missing");
  }
  std::vector<double> out;
  try {
    for (auto piece : split(*v, ',')) out.push_back(parse_number<double>(piece));
  } catch (const std::invalid_argument& e) {
    fail(key, e.what());
  }
  if (out.empty()) fail(key, "empty list");
  return out;
}

CardinalityDistribution Config::take_distribution(const std::string& key,
                                                  std::optional<CardinalityDistribution> fallback) const {
  const auto v = take(key);
  if (!v) {
    if (fallback) return *fallback;
    fail(key, "required key is missing");
  }
  try {
    return CardinalityDistribution::parse(*v);
  } catch (const std::invalid_argument& e) {
    fail(key, e.what());
  }
}

std::vector<std::string> Config::indexed_keys(const std::string& prefix) const {
  std::vector<std::string> keys;
  for (std::size_t i = 1;; ++i) {
    const std::string key = prefix + "." + std::to_string(i);
    if (!has(key)) break;
    keys.push_back(key);
  }
  return keys;
}

const std::vector<std::pair<CommunitySet, double>>& Config::take_profile() const {
  profile_used_ = true;
  return profile_;
}

void Config::check_all_used() const {
  for (const auto& [key, entry] : entries_) {
    if (!entry.used) fail(key, "unknown key");
  }
  if (!profile_.empty() && !profile_used_) {
    throw ConfigError(source_ + ":" + std::to_string(first_profile_line_) +
                      ": profile lines are not used by this command");
  }
}

HParams hparams_from_config(const Config& cfg) {
  HParams h;
  h.p_v = cfg.take_double("p_v", 0.0);
  h.p_ve = cfg.take_double("p_ve", 0.0);
  for (const auto& key : cfg.indexed_keys("p_e")) h.p_e.push_back(cfg.take_double(key));
  h.y_dist = cfg.take_distribution("y", CardinalityDistribution::constant(2));
  for (const auto& key : cfg.indexed_keys("x")) h.x_dists.push_back(cfg.take_distribution(key));
  if (h.x_dists.size() != h.p_e.size()) {
    throw ConfigError(cfg.source() + ": p_e.* lists " + std::to_string(h.p_e.size()) +
                      " edge events but x.* lists " + std::to_string(h.x_dists.size()) +
                      " distributions");
  }
  const auto m = cfg.take_uint("m", 1);
  if (m == 0 || m > 1'000'000) throw ConfigError(cfg.source() + ": key 'm': must be in [1, 1e6]");
  h.m = static_cast<std::uint32_t>(m);
  h.gamma = cfg.take_double("gamma", 0.0);
  h.enforce_t_quarter_cap = cfg.take_bool("cap", false);
  h.steps = cfg.take_uint("steps", 0);
  try {
    h.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(cfg.source() + ": model H: " + e.what());
  }
  return h;
}

GParams gparams_from_config(const Config& cfg) {
  GParams g;
  g.p = cfg.take_double("p");
  g.M = cfg.take_doubles("M");
  const auto r = static_cast<std::uint32_t>(g.M.size());
  for (const auto& key : cfg.indexed_keys("x")) g.x_dists.push_back(cfg.take_distribution(key));
  if (cfg.has("edge_size")) g.edge_size = cfg.take_distribution("edge_size");
  g.gamma = cfg.take_double("gamma", 0.0);
  g.steps = cfg.take_uint("steps", 0);
  try {
    const auto family = cfg.take("profile");
    if (family) {
      if (cfg.has_profile()) throw ConfigError(cfg.source() + ": give either 'profile =' or profile lines, not both");
      const auto parts = split(*family, ':');
      if (parts.size() != 2 || parts[0] != "diagonal") {
        throw ConfigError(cfg.source() + ": key 'profile': expected 'diagonal:ALPHA'");
      }
      g.profile = InterCommunityProfile::diagonal(r, parse_number<double>(parts[1]));
    } else {
      if (!cfg.has_profile()) throw ConfigError(cfg.source() + ": model G needs profile lines 'i,j:prob'");
      g.profile = InterCommunityProfile::create(r, cfg.take_profile());
    }
    g.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(cfg.source() + ": model G: " + e.what());
  }
  return g;
}

}  // namespace pahyper
