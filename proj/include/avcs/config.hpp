#pragma once

#include <charconv>
#include <cstdint>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "avcs/scenario.hpp"

namespace avcs {

// Flat `key = value` scenario files. Blank lines and `#` comments are ignored;
// unknown or repeated keys are errors that name the line.

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <class T>
T parse_number(std::string_view text, int line, std::string_view key) {
  T value{};
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end || text.empty())
    throw ConfigError("bad value '" + std::string(text) + "' for " + std::string(key), line);
  return value;
}

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == ',')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != ',') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

// `disc <cx> <cy> <r>` or `rect <cx> <cy> <half_w> <half_h>`, several separated by ';'.
inline std::vector<VoidSpec> parse_voids(std::string_view text, int line) {
  std::vector<VoidSpec> out;
  if (text == "none") return out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto stop = std::min(text.find(';', start), text.size());
    const auto part = trim(text.substr(start, stop - start));
    start = stop + 1;
    if (part.empty()) continue;
    const auto tok = split_ws(part);
    auto num = [&](std::size_t i) { return parse_number<double>(tok[i], line, "voids"); };
    if (tok[0] == "disc" && tok.size() == 4)
      out.push_back(VoidSpec::disc({num(1), num(2)}, num(3)));
    else if (tok[0] == "rect" && tok.size() == 5)
      out.push_back(VoidSpec::rectangle({num(1), num(2)}, num(3), num(4)));
    else
      throw ConfigError("bad void '" + std::string(part) + "'", line);
  }
  return out;
}

}  // namespace detail

inline void apply_config_key(ScenarioConfig& c, std::string_view key, std::string_view value, int line) {
  using detail::parse_number;
  if (key == "deployment") {
    if (value == "grid")
      c.deployment = DeploymentKind::grid;
    else if (value == "random")
      c.deployment = DeploymentKind::random;
    else if (value == "fixture_abc")
      c.deployment = DeploymentKind::fixture_abc;
    else
      throw ConfigError("unknown deployment '" + std::string(value) + "'", line);
  } else if (key == "rows") {
    c.rows = parse_number<int>(value, line, key);
  } else if (key == "cols") {
    c.cols = parse_number<int>(value, line, key);
  } else if (key == "spacing") {
    c.spacing = parse_number<double>(value, line, key);
  } else if (key == "n") {
    c.n = parse_number<int>(value, line, key);
  } else if (key == "width") {
    c.width = parse_number<double>(value, line, key);
  } else if (key == "height") {
    c.height = parse_number<double>(value, line, key);
  } else if (key == "radio_range") {
    // `degree:<d>` picks the range giving mean degree d.
    if (value.starts_with("degree:")) {
      c.target_degree = parse_number<double>(value.substr(7), line, key);
    } else {
      c.radio_range = parse_number<double>(value, line, key);
      c.target_degree.reset();
    }
  } else if (key == "voids") {
    c.voids = detail::parse_voids(value, line);
  } else if (key == "anchors") {
    if (value == "corners") {
      c.anchors.reset();
    } else {
      std::vector<NodeId> ids;
      for (auto tok : detail::split_ws(value)) ids.push_back(parse_number<int>(tok, line, key));
      c.anchors = ids;
    }
  } else if (key == "dims") {
    c.dims = parse_number<int>(value, line, key);
  } else if (key == "align_rule") {
    if (value == "self" || value == "self-weighted" || value == "eq1")
      c.align_rule = AlignRule::self_weighted;
    else if (value == "average" || value == "uniform-average" || value == "eq2")
      c.align_rule = AlignRule::uniform_average;
    else
      throw ConfigError("unknown align_rule '" + std::string(value) + "'", line);
  } else if (key == "align_depth") {
    c.align_depth = parse_number<int>(value, line, key);
  } else if (key == "distance") {
    if (value == "euclid")
      c.distance = DistanceKind::euclidean;
    else if (value == "manhattan")
      c.distance = DistanceKind::manhattan;
    else if (value == "semi")
      c.distance = DistanceKind::semi_manhattan;
    else if (value == "geo")
      c.distance = DistanceKind::planar_euclidean;
    else
      throw ConfigError("unknown distance '" + std::string(value) + "'", line);
  } else if (key == "semi_weight") {
    c.semi_weight = parse_number<double>(value, line, key);
  } else if (key == "protocol") {
    try {
      c.protocol = parse_protocol(value);
    } catch (const ConfigError& e) {
      throw ConfigError(e.what(), line);
    }
  } else if (key == "loc_error") {
    c.loc_error = parse_number<double>(value, line, key);
  } else if (key == "seed") {
    c.seed = parse_number<std::uint64_t>(value, line, key);
  } else if (key == "ttl_factor") {
    c.ttl_factor = parse_number<double>(value, line, key);
  } else {
    throw ConfigError("unknown key '" + std::string(key) + "'", line);
  }
}

inline ScenarioConfig parse_config(std::istream& in, std::string name = "scenario") {
  ScenarioConfig c;
  c.name = std::move(name);
  std::set<std::string, std::less<>> seen;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string_view text = raw;
    if (const auto hash = text.find('#'); hash != std::string_view::npos) text = text.substr(0, hash);
    text = detail::trim(text);
    if (text.empty()) continue;
    const auto eq = text.find('=');
    if (eq == std::string_view::npos) throw ConfigError("expected 'key = value'", line);
    const auto key = detail::trim(text.substr(0, eq));
    const auto value = detail::trim(text.substr(eq + 1));
    if (key.empty() || value.empty()) throw ConfigError("expected 'key = value'", line);
    if (!seen.emplace(key).second) throw ConfigError("duplicate key '" + std::string(key) + "'", line);
    apply_config_key(c, key, value, line);
  }
  validate(c);
  return c;
}

inline ScenarioConfig parse_config(std::string_view text, std::string name = "scenario") {
  std::istringstream in{std::string(text)};
  return parse_config(in, std::move(name));
}

inline ScenarioConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("io", "cannot read config '" + path + "'");
  std::string stem = path;
  if (const auto slash = stem.find_last_of('/'); slash != std::string::npos) stem = stem.substr(slash + 1);
  if (const auto dot = stem.find_last_of('.'); dot != std::string::npos && dot > 0) stem = stem.substr(0, dot);
  return parse_config(in, stem);
}

}  // namespace avcs
