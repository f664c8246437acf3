#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "specfun/errors.hpp"

namespace specfun::verify {

enum class Spacing { linear, log, logit };

inline std::string_view to_string(Spacing s) {
  switch (s) {
    case Spacing::linear: return "linear";
    case Spacing::log: return "log";
    case Spacing::logit: return "logit";
  }
  return "linear";
}

inline Spacing parse_spacing(std::string_view s) {
  if (s == "linear" || s == "lin") return Spacing::linear;
  if (s == "log" || s == "geometric") return Spacing::log;
  if (s == "logit") return Spacing::logit;
  fail(errc::configuration, "unknown grid spacing '" + std::string(s) + "'");
}

/// Sampling specification: n points from lo to hi (both included).
/// Logit spacing samples sigma(s) for s evenly spaced between logit(lo)
/// and logit(hi), clamped to [1e-6, 1 - 1e-6] so both ends are resolved.
struct GridSpec {
  double lo = 0.0;
  double hi = 1.0;
  std::int64_t n = 100;
  Spacing spacing = Spacing::linear;

  void validate() const {
    if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) fail(errc::configuration, "grid needs lo < hi");
    if (n < 2) fail(errc::configuration, "grid needs n >= 2");
    if (spacing == Spacing::log && !(lo > 0.0)) fail(errc::configuration, "log grid needs lo > 0");
    if (spacing == Spacing::logit && !(lo >= 0.0 && hi <= 1.0))
      fail(errc::configuration, "logit grid is only defined inside [0,1]");
  }

  std::vector<double> points() const {
    validate();
    std::vector<double> out(static_cast<std::size_t>(n));
    const double last = static_cast<double>(n - 1);
    switch (spacing) {
      case Spacing::linear:
        for (std::int64_t i = 0; i < n; ++i) out[i] = lo + (hi - lo) * (i / last);
        out.back() = hi;
        break;
      case Spacing::log: {
        const double a = std::log(lo), b = std::log(hi);
        for (std::int64_t i = 0; i < n; ++i) out[i] = std::exp(a + (b - a) * (i / last));
        out.front() = lo;
        out.back() = hi;
        break;
      }
      case Spacing::logit: {
        constexpr double edge = 1e-6;
        // clipped ends map to exactly +-logit(edge) so the grid stays symmetric
        const double cap = std::log((1.0 - edge) / edge);
        const double a = lo <= edge ? -cap : std::log(lo / (1.0 - lo));
        const double b = hi >= 1.0 - edge ? cap : std::log(hi / (1.0 - hi));
        for (std::int64_t i = 0; i < n; ++i) {
          const double s = a + (b - a) * (i / last);
          out[i] = 1.0 / (1.0 + std::exp(-s));
        }
        break;
      }
    }
    return out;
  }

  /// Grid points rounded to integers, deduplicated and kept in order.
  std::vector<std::int64_t> integer_points() const {
    std::vector<std::int64_t> out;
    for (double x : points()) out.push_back(static_cast<std::int64_t>(std::llround(x)));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  std::string to_string() const {
    std::ostringstream os;
    os.precision(17);
    os << lo << ',' << hi << ',' << n << ',' << verify::to_string(spacing);
    return os.str();
  }
};

/// Parses "lo,hi,n,spacing" (spacing optional, default linear).
inline GridSpec parse_grid(std::string_view text) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : text) {
    if (ch == ',') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  parts.push_back(cur);
  if (parts.size() < 3 || parts.size() > 4) fail(errc::configuration, "grid must look like lo,hi,n[,spacing]");
  GridSpec g;
  try {
    std::size_t used = 0;
    g.lo = std::stod(parts[0], &used);
    if (used != parts[0].size()) throw std::invalid_argument("lo");
    g.hi = std::stod(parts[1], &used);
    if (used != parts[1].size()) throw std::invalid_argument("hi");
    g.n = std::stoll(parts[2], &used);
    if (used != parts[2].size()) throw std::invalid_argument("n");
  } catch (const std::logic_error&) {
    fail(errc::configuration, "grid must look like lo,hi,n[,spacing]");
  }
  if (parts.size() == 4) g.spacing = parse_spacing(parts[3]);
  g.validate();
  return g;
}

}  // namespace specfun::verify
