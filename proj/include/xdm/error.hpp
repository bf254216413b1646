#pragma once

#include <stdexcept>
#include <string>

namespace xdm {

// Every failure mode the library reports. Codes are stable identifiers;
// messages carry context.
enum class errc {
  domain_error,
  numerical_error,
  unsupported_order,
  empty_support,
  invalid_scale,
  unknown_family,
  exponential_case,
  missing_parameter,
  not_monotone,
  divergent_integral,
  invalid_slope,
  integration_failure,
  rate_out_of_domain,
  out_of_support,
  not_censored,
  domain_too_small,
  not_censorable,
  unbounded_support,
  negativity_violation,
  domain_violation,
  domain_not_full,
  nonpositive_slope,
  invalid_variance_function,
  window_out_of_domain,
  no_power_asymptotics,
  exponential_domain,
  no_exponential_asymptotics,
  invalid_argument,
  parse_error,
  config_error,
};

const char* to_string(errc code);

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) {
  throw error(code, what);
}

// CLI contract: 2 for rejected inputs, 3 for numerical breakdown.
int exit_code_for(errc code);

#define XDM_REQUIRE(cond, code, msg) \
  do {                               \
    if (!(cond)) ::xdm::raise((code), (msg)); \
  } while (0)

}  // namespace xdm
