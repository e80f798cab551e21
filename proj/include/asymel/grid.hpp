#pragma once

// Sampling grids: `x=LO:HI:N,y=LO:HI:N[,z=LO:HI:N]` or
// `r=LO:HI:N,theta=LO:HI:N[,z=LO:HI:N]`, optionally followed by `exclude=R`.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "asymel/errors.hpp"

namespace asymel {

struct AxisRange {
  double lo = 0.0;
  double hi = 0.0;
  int count = 1;

  /// i-th of `count` equally spaced values; a single sample sits at lo.
  double at(int i) const { return count == 1 ? lo : lo + (hi - lo) * i / (count - 1); }
};

enum class GridKind { Cartesian, Cylindrical };

struct GridPoint {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
  double r = 0.0;
  double theta = 0.0;
};

struct GridSpec {
  GridKind kind = GridKind::Cartesian;
  AxisRange first;   // x or r
  AxisRange second;  // y or theta
  AxisRange third;   // z; a single sample at 0 when absent
  bool has_third = false;
  double exclusion_radius = 0.0;

  static GridSpec cartesian(AxisRange x, AxisRange y) { return {GridKind::Cartesian, x, y, {}, false, 0.0}; }
  static GridSpec cartesian(AxisRange x, AxisRange y, AxisRange z) {
    return {GridKind::Cartesian, x, y, z, true, 0.0};
  }
  static GridSpec cylindrical(AxisRange r, AxisRange theta) {
    return {GridKind::Cylindrical, r, theta, {}, false, 0.0};
  }
  static GridSpec cylindrical(AxisRange r, AxisRange theta, AxisRange z) {
    return {GridKind::Cylindrical, r, theta, z, true, 0.0};
  }

  /// Points in row-major order, first axis outermost. Points strictly inside
  /// the exclusion radius are dropped.
  std::vector<GridPoint> points() const {
    std::vector<GridPoint> out;
    out.reserve(static_cast<std::size_t>(first.count) * second.count * third.count);
    const double cut = exclusion_radius * (1.0 - 1e-12);
    for (int i = 0; i < first.count; ++i) {
      for (int j = 0; j < second.count; ++j) {
        for (int k = 0; k < third.count; ++k) {
          GridPoint p;
          p.z = third.at(k);
          if (kind == GridKind::Cartesian) {
            p.x = first.at(i);
            p.y = second.at(j);
            p.r = std::hypot(p.x, p.y);
            p.theta = std::atan2(p.y, p.x);
          } else {
            p.r = first.at(i);
            p.theta = second.at(j);
            p.x = p.r * std::cos(p.theta);
            p.y = p.r * std::sin(p.theta);
          }
          if (exclusion_radius > 0.0 && p.r < cut) continue;
          out.push_back(p);
        }
      }
    }
    return out;
  }

  /// Diagonal of the Cartesian bounding box of the sampled region.
  double diameter() const {
    double dx = 0.0;
    double dy = 0.0;
    if (kind == GridKind::Cartesian) {
      dx = first.hi - first.lo;
      dy = second.hi - second.lo;
    } else {
      const double r = std::max(std::abs(first.lo), std::abs(first.hi));
      dx = 2.0 * r;
      dy = 2.0 * r;
    }
    const double dz = third.hi - third.lo;
    return std::sqrt(dx * dx + dy * dy + dz * dz);
  }
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

/// Whole-token double parse; a leading '+' is accepted, non-finite values are not.
inline bool parse_double(std::string_view s, double& out) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (s.empty()) return false;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), out);
  return res.ec == std::errc{} && res.ptr == s.data() + s.size() && std::isfinite(out);
}

inline bool parse_int(std::string_view s, int& out) {
  s = trim(s);
  if (s.empty()) return false;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), out);
  return res.ec == std::errc{} && res.ptr == s.data() + s.size();
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

inline AxisRange parse_axis(std::string_view name, std::string_view body) {
  const auto parts = split(body, ':');
  const std::string axis(name);
  if (parts.size() != 3) throw UsageError("grid axis '" + axis + "' must read LO:HI:N");
  AxisRange a;
  if (!parse_double(parts[0], a.lo) || !parse_double(parts[1], a.hi))
    throw UsageError("grid axis '" + axis + "' has a malformed bound");
  if (!parse_int(parts[2], a.count) || a.count < 1)
    throw UsageError("grid axis '" + axis + "' needs a positive integer count");
  if (a.hi < a.lo) throw UsageError("grid axis '" + axis + "' has HI < LO");
  if (a.count > 1 && a.hi == a.lo) throw UsageError("grid axis '" + axis + "' has an empty range");
  return a;
}

}  // namespace detail

inline GridSpec parse_grid_spec(std::string_view text) {
  GridSpec g;
  std::vector<std::string> names;
  std::vector<AxisRange> axes;
  bool excluded = false;
  for (std::string_view item : detail::split(text, ',')) {
    item = detail::trim(item);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) throw UsageError("grid item '" + std::string(item) + "' lacks '='");
    const std::string_view name = detail::trim(item.substr(0, eq));
    const std::string_view body = item.substr(eq + 1);
    if (name == "exclude") {
      if (excluded) throw UsageError("grid exclusion radius given twice");
      if (!detail::parse_double(body, g.exclusion_radius) || g.exclusion_radius < 0.0)
        throw UsageError("grid exclusion radius must be a number >= 0");
      excluded = true;
      continue;
    }
    if (excluded) throw UsageError("grid 'exclude' must come last");
    names.emplace_back(name);
    axes.push_back(detail::parse_axis(name, body));
  }

  const bool cart = names.size() >= 2 && names[0] == "x" && names[1] == "y";
  const bool cyl = names.size() >= 2 && names[0] == "r" && names[1] == "theta";
  const bool z_ok = names.size() == 2 || (names.size() == 3 && names[2] == "z");
  if (!(cart || cyl) || !z_ok) throw UsageError("grid axes must be x,y[,z] or r,theta[,z]");
  if (cyl && axes[0].lo < 0.0) throw UsageError("grid radius must be >= 0");

  g.kind = cart ? GridKind::Cartesian : GridKind::Cylindrical;
  g.first = axes[0];
  g.second = axes[1];
  if (names.size() == 3) {
    g.third = axes[2];
    g.has_third = true;
  }
  return g;
}

}  // namespace asymel
