#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <tuple>
#include <vector>

namespace specfun::verify {

/// One evaluated inequality or identity at one point. margin < 0 means the
/// claim is violated there; lhs/rhs are the two sides being compared.
struct Sample {
  double point = 0.0;
  double margin = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  std::string where;
};

struct Violation {
  double point = 0.0;
  double margin = 0.0;
  std::string where;
};

/// A grid point where a kernel refused to evaluate.
struct PointFailure {
  double point = 0.0;
  std::string where;
  std::string message;
};

struct SuiteReport {
  std::string suite_id;
  std::string anchor;
  std::size_t points_evaluated = 0;
  double min_margin = std::numeric_limits<double>::quiet_NaN();
  double worst_point = std::numeric_limits<double>::quiet_NaN();
  double worst_lhs = std::numeric_limits<double>::quiet_NaN();
  double worst_rhs = std::numeric_limits<double>::quiet_NaN();
  std::string worst_where;
  double tolerance = 0.0;
  std::vector<Violation> violations;
  std::vector<PointFailure> failures;
  double elapsed_ms = 0.0;
  // probes exist to demonstrate a violation; they pass when one is found
  bool expect_violations = false;
  bool skipped = false;
  std::string detail;

  bool passed() const {
    if (skipped) return true;
    if (!failures.empty()) return false;
    return expect_violations ? !violations.empty() : violations.empty();
  }
};

namespace detail {

inline bool sample_less(const Sample& x, const Sample& y) {
  return std::tie(x.point, x.where, x.margin, x.lhs, x.rhs) < std::tie(y.point, y.where, y.margin, y.lhs, y.rhs);
}

}  // namespace detail

/// Pure fold of samples into a report. The input order does not matter:
/// samples are sorted first, so ties for the worst point resolve the same
/// way however the grid was traversed.
inline SuiteReport fold(std::string suite_id, std::vector<Sample> samples, std::vector<PointFailure> failures,
                        double tolerance) {
  std::sort(samples.begin(), samples.end(), detail::sample_less);
  std::sort(failures.begin(), failures.end(), [](const PointFailure& x, const PointFailure& y) {
    return std::tie(x.point, x.where, x.message) < std::tie(y.point, y.where, y.message);
  });
  SuiteReport rep;
  rep.suite_id = std::move(suite_id);
  rep.tolerance = tolerance;
  rep.points_evaluated = samples.size();
  const Sample* worst = nullptr;
  for (const Sample& s : samples) {
    // NaN margins count as violations and as the worst point
    const bool nan = std::isnan(s.margin);
    if (worst == nullptr || nan || (!std::isnan(worst->margin) && s.margin < worst->margin)) {
      if (worst == nullptr || !std::isnan(worst->margin)) worst = &s;
    }
    if (nan || s.margin < -tolerance) rep.violations.push_back({s.point, s.margin, s.where});
  }
  if (worst != nullptr) {
    rep.min_margin = worst->margin;
    rep.worst_point = worst->point;
    rep.worst_lhs = worst->lhs;
    rep.worst_rhs = worst->rhs;
    rep.worst_where = worst->where;
  }
  rep.failures = std::move(failures);
  return rep;
}

}  // namespace specfun::verify
