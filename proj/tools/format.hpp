#pragma once

// Number formatting shared by every CLI verb, and a JSON writer that prints
// floats with 17 significant digits (nlohmann's own dump uses the shortest
// round-trip form, which is not what the output contract asks for).

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

#include <json.hpp>

namespace specfun::cli {

using json = nlohmann::ordered_json;

/// 17 significant digits; non-finite values become "nan", "inf", "-inf".
inline std::string fmt17(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

/// Human format: 10 digits after the point with trailing zeros dropped, or
/// 10 significant digits in scientific notation for very small or large values.
inline std::string fmt_human(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) return "0";
  char buf[64];
  const double a = std::abs(v);
  if (a >= 1e-4 && a < 1e12) {
    std::snprintf(buf, sizeof buf, "%.10f", v);
    std::string s = buf;
    s.erase(s.find_last_not_of('0') + 1);
    if (s.back() == '.') s.pop_back();
    if (s == "-0") s = "0";
    return s;
  }
  std::snprintf(buf, sizeof buf, "%.9e", v);
  return buf;
}

/// Quotes a CSV field when it contains a separator, quote or newline.
inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

namespace detail {

inline void write_string(std::ostream& os, const std::string& s) {
  // reuse nlohmann's escaping for strings
  os << json(s).dump();
}

inline void write_json(std::ostream& os, const json& j, int indent, int depth) {
  const std::string pad(static_cast<std::size_t>(indent * (depth + 1)), ' ');
  const std::string close_pad(static_cast<std::size_t>(indent * depth), ' ');
  const char* nl = indent > 0 ? "\n" : "";
  switch (j.type()) {
    case json::value_t::object: {
      if (j.empty()) {
        os << "{}";
        return;
      }
      os << '{' << nl;
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) os << ',' << nl;
        first = false;
        os << pad;
        write_string(os, it.key());
        os << (indent > 0 ? ": " : ":");
        write_json(os, it.value(), indent, depth + 1);
      }
      os << nl << close_pad << '}';
      return;
    }
    case json::value_t::array: {
      if (j.empty()) {
        os << "[]";
        return;
      }
      os << '[' << nl;
      bool first = true;
      for (const auto& v : j) {
        if (!first) os << ',' << nl;
        first = false;
        os << pad;
        write_json(os, v, indent, depth + 1);
      }
      os << nl << close_pad << ']';
      return;
    }
    case json::value_t::number_float: {
      const double v = j.get<double>();
      if (!std::isfinite(v)) {
        os << "null";
      } else {
        std::string s = fmt17(v);
        // keep the value a float on re-read
        if (s.find_first_of(".eE") == std::string::npos) s += ".0";
        os << s;
      }
      return;
    }
    default:
      os << j.dump();
  }
}

}  // namespace detail

/// Serializes j with floats at 17 significant digits and NaN/inf as null.
inline void write_json(std::ostream& os, const json& j, int indent = 2) {
  detail::write_json(os, j, indent, 0);
  os << '\n';
}

}  // namespace specfun::cli
