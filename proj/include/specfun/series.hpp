#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdlib>
#include <limits>
#include <optional>
#include <string>

#include "specfun/errors.hpp"

namespace specfun {

/// Value of a truncated series together with its convergence metadata.
struct SeriesEval {
  double value = 0.0;
  std::size_t terms_used = 0;
  double est_error = 0.0;  // absolute
  bool converged = false;
};

/// Term cap override read once from SPECFUN_TERM_CAP (positive integer).
/// Invalid or missing values leave the per-operation defaults in place.
inline std::optional<std::size_t> term_cap_override() {
  static const std::optional<std::size_t> cap = []() -> std::optional<std::size_t> {
    const char* raw = std::getenv("SPECFUN_TERM_CAP");
    if (raw == nullptr || *raw == '\0') return std::nullopt;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(raw, &end, 10);
    if (end == raw || *end != '\0' || v == 0) return std::nullopt;
    return static_cast<std::size_t>(v);
  }();
  return cap;
}

struct SeriesOptions {
  /// Summation stops once the estimated tail drops below stop_rel * |sum|.
  double stop_rel = 1e-17;
  /// A finished sum is flagged converged when est_error <= accept_rel * max(1, |value|).
  double accept_rel = 1e-12;
  std::size_t term_cap = 2'000'000;

  static SeriesOptions with_cap(std::size_t default_cap) {
    SeriesOptions o;
    o.term_cap = term_cap_override().value_or(default_cap);
    return o;
  }
};

inline SeriesOptions default_hypergeometric_options() { return SeriesOptions::with_cap(2'000'000); }

class convergence_error : public error {
 public:
  convergence_error(const std::string& what, SeriesEval partial)
      : error(errc::convergence, what), partial_(partial) {}

  const SeriesEval& partial() const noexcept { return partial_; }

 private:
  SeriesEval partial_;
};

namespace detail {

inline bool is_nonpositive_integer(double x) noexcept {
  return x <= 0.0 && std::nearbyint(x) == x;
}

inline void finish(SeriesEval& s, const SeriesOptions& opt) {
  s.converged = std::isfinite(s.value) && s.est_error <= opt.accept_rel * std::max(1.0, std::abs(s.value));
}

}  // namespace detail
}  // namespace specfun
