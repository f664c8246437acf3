#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace specfun {

/// Failure categories shared by every kernel operation.
///
/// The CLI maps these onto its exit codes: argument problems
/// (domain, pole, parameter, regime, boundary) exit with 2, lookup and
/// configuration problems with 64.
enum class errc {
  domain,         // argument outside the mathematical domain
  pole,           // argument sits on a pole
  parameter,      // inadmissible parameter combination
  regime,         // valid function, but this routine does not cover the regime
  convergence,    // series or iteration ran out of budget
  computation,    // intermediate overflow, quadrature failure and the like
  boundary,       // endpoint of an open interval (e.g. K at r = 1)
  configuration,  // bad option value
  lookup,         // unknown suite / target / table
};

constexpr std::string_view to_string(errc e) noexcept {
  switch (e) {
    case errc::domain: return "domain error";
    case errc::pole: return "pole error";
    case errc::parameter: return "parameter error";
    case errc::regime: return "regime error";
    case errc::convergence: return "convergence error";
    case errc::computation: return "computation error";
    case errc::boundary: return "boundary error";
    case errc::configuration: return "configuration error";
    case errc::lookup: return "lookup error";
  }
  return "error";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

}  // namespace specfun
