#pragma once

#include <array>
#include <string>
#include <vector>

#include "swanson/errors.hpp"

namespace swanson {

/// Flat INI-style run configuration.
///
///   [model]
///   type = pt            ; or morse
///   lambda2 = 1.0        ; pt: lambda2, sigma; morse: a2, b2, sigma
///   sigma = 1.0
///   [swanson]
///   alpha = 0.5
///   beta = 0.25
///   [grid]
///   x_min = -10
///   x_max = 10
///   n_points = 2001
///   [task]
///   k = 0.5, 1, 2        ; wavenumber list for continuum/scatter
///
/// `;` and `#` start comments.  Keys keep their textual form so a parsed
/// file serializes back losslessly.
class RunConfig {
 public:
  static RunConfig parse_file(const std::string& path);
  static RunConfig parse_string(const std::string& text);

  std::string serialize() const;

  bool has(const std::string& section, const std::string& key) const;
  std::string get(const std::string& section, const std::string& key) const;
  std::string get_or(const std::string& section, const std::string& key,
                     const std::string& fallback) const;
  double get_double(const std::string& section, const std::string& key) const;
  double get_double_or(const std::string& section, const std::string& key,
                       double fallback) const;
  int get_int_or(const std::string& section, const std::string& key,
                 int fallback) const;
  std::vector<double> get_double_list(const std::string& section,
                                      const std::string& key) const;

  void set(const std::string& section, const std::string& key,
           const std::string& value);

  /// Ordered (section, key, value) triples, for the manifest echo.
  const std::vector<std::array<std::string, 3>>& entries() const {
    return entries_;
  }

  bool operator==(const RunConfig& other) const {
    return entries_ == other.entries_;
  }

 private:
  std::vector<std::array<std::string, 3>> entries_;
};

/// Formats a double with 17 significant digits (round-trip safe).
std::string format_double(double v);

}  // namespace swanson
