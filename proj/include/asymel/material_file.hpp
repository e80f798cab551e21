#pragma once

// Material definition files: one `name = value` per line, `#` starts a
// comment. The 3D key set is C11 C13 C16 C33 C44 C45 C61 C66, the plane set
// lambda0 mu0 mu; which set appears decides the result type.

#include <algorithm>
#include <array>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>

#include "asymel/errors.hpp"
#include "asymel/grid.hpp"
#include "asymel/material.hpp"

namespace asymel {

using MaterialDefinition = std::variant<MaterialParams3D, PlaneMaterial>;

inline constexpr std::array<const char*, 3> kPlaneParameterNames = {"lambda0", "mu0", "mu"};

namespace detail {

template <std::size_t N>
bool in_set(const std::array<const char*, N>& names, std::string_view key) {
  return std::any_of(names.begin(), names.end(), [key](const char* n) { return key == n; });
}

template <std::size_t N>
void require_all(const std::array<const char*, N>& names, const std::map<std::string, double>& values) {
  for (const char* n : names) {
    if (!values.count(n)) throw ParseError(ParseError::Kind::MissingKey, n, 0, std::string("missing key '") + n + "'");
  }
}

}  // namespace detail

inline MaterialDefinition parse_material_text(std::string_view text) {
  std::map<std::string, double> values;
  bool any3d = false;
  bool any2d = false;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ParseError(ParseError::Kind::MalformedNumber, std::string(line), line_no,
                       "line " + std::to_string(line_no) + ": expected 'name = value'");
    const std::string key(detail::trim(line.substr(0, eq)));
    const bool is3d = detail::in_set(kFamilyParameterNames, key);
    const bool is2d = detail::in_set(kPlaneParameterNames, key);
    if (!is3d && !is2d)
      throw ParseError(ParseError::Kind::UnknownKey, key, line_no,
                       "line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    if (values.count(key))
      throw ParseError(ParseError::Kind::DuplicateKey, key, line_no,
                       "line " + std::to_string(line_no) + ": key '" + key + "' given twice");
    double v = 0.0;
    if (!detail::parse_double(line.substr(eq + 1), v))
      throw ParseError(ParseError::Kind::MalformedNumber, key, line_no,
                       "line " + std::to_string(line_no) + ": malformed number for '" + key + "'");
    values.emplace(key, v);
    any3d = any3d || is3d;
    any2d = any2d || is2d;
  }

  if (any3d && any2d)
    throw ParseError(ParseError::Kind::AmbiguousKind, "", 0, "file mixes 3D (C..) and plane (lambda0, mu0, mu) keys");
  if (any2d) {
    detail::require_all(kPlaneParameterNames, values);
    return PlaneMaterial(values["lambda0"], values["mu0"], values["mu"]);
  }
  detail::require_all(kFamilyParameterNames, values);
  std::array<double, 8> arr{};
  for (std::size_t i = 0; i < arr.size(); ++i) arr[i] = values[kFamilyParameterNames[i]];
  return MaterialParams3D(FamilyCoefficients::from_array(arr));
}

inline MaterialDefinition parse_material_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoFailure("cannot open material file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoFailure("cannot read material file '" + path + "'");
  return parse_material_text(ss.str());
}

}  // namespace asymel
