#include "swanson/config.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace swanson {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

RunConfig RunConfig::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_string(ss.str());
}

RunConfig RunConfig::parse_string(const std::string& text) {
  RunConfig cfg;
  std::istringstream in(text);
  std::string line, section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto cpos = line.find_first_of(";#");
    if (cpos != std::string::npos) line = line.substr(0, cpos);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw ConfigError("malformed section header at line " +
                          std::to_string(lineno));
      section = trim(line.substr(1, line.size() - 2));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("expected key = value at line " +
                        std::to_string(lineno));
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty())
      throw ConfigError("empty key at line " + std::to_string(lineno));
    cfg.entries_.push_back({section, key, value});
  }
  return cfg;
}

std::string RunConfig::serialize() const {
  std::string out;
  std::string current;
  bool first = true;
  for (const auto& [sec, key, value] : entries_) {
    if (first || sec != current) {
      if (!first) out += "\n";
      out += "[" + sec + "]\n";
      current = sec;
      first = false;
    }
    out += key + " = " + value + "\n";
  }
  return out;
}

bool RunConfig::has(const std::string& section, const std::string& key) const {
  for (const auto& e : entries_)
    if (e[0] == section && e[1] == key) return true;
  return false;
}

std::string RunConfig::get(const std::string& section,
                           const std::string& key) const {
  for (const auto& e : entries_)
    if (e[0] == section && e[1] == key) return e[2];
  throw ConfigError("missing config key [" + section + "] " + key);
}

std::string RunConfig::get_or(const std::string& section,
                              const std::string& key,
                              const std::string& fallback) const {
  return has(section, key) ? get(section, key) : fallback;
}

double RunConfig::get_double(const std::string& section,
                             const std::string& key) const {
  const std::string v = get(section, key);
  try {
    size_t pos = 0;
    const double d = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    if (!std::isfinite(d))
      throw ConfigError("non-finite value for [" + section + "] " + key);
    return d;
  } catch (const std::invalid_argument&) {
    throw ConfigError("cannot parse number for [" + section + "] " + key +
                      ": '" + v + "'");
  }
}

double RunConfig::get_double_or(const std::string& section,
                                const std::string& key,
                                double fallback) const {
  return has(section, key) ? get_double(section, key) : fallback;
}

int RunConfig::get_int_or(const std::string& section, const std::string& key,
                          int fallback) const {
  if (!has(section, key)) return fallback;
  return static_cast<int>(get_double(section, key));
}

std::vector<double> RunConfig::get_double_list(const std::string& section,
                                               const std::string& key) const {
  std::string v = get(section, key);
  std::replace(v.begin(), v.end(), ',', ' ');
  std::vector<double> out;
  std::istringstream in(v);
  std::string item;
  while (in >> item) {
    std::size_t used = 0;
    try {
      out.push_back(std::stod(item, &used));
    } catch (const std::invalid_argument&) {
      used = 0;
    }
    if (used != item.size())
      throw ConfigError("cannot parse list entry '" + item + "' for [" +
                        section + "] " + key);
    if (!std::isfinite(out.back()))
      throw ConfigError("non-finite list entry for [" + section + "] " + key);
  }
  if (out.empty())
    throw ConfigError("empty list for [" + section + "] " + key);
  return out;
}

void RunConfig::set(const std::string& section, const std::string& key,
                    const std::string& value) {
  for (auto& e : entries_) {
    if (e[0] == section && e[1] == key) {
      e[2] = value;
      return;
    }
  }
  entries_.push_back({section, key, value});
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace swanson
