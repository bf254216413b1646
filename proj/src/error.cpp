#include "xdm/error.hpp"

namespace xdm {

const char* to_string(errc code) {
  switch (code) {
    case errc::domain_error: return "DomainError";
    case errc::numerical_error: return "NumericalError";
    case errc::unsupported_order: return "UnsupportedOrder";
    case errc::empty_support: return "EmptySupport";
    case errc::invalid_scale: return "InvalidScale";
    case errc::unknown_family: return "UnknownFamily";
    case errc::exponential_case: return "ExponentialCase";
    case errc::missing_parameter: return "MissingParameter";
    case errc::not_monotone: return "NotMonotone";
    case errc::divergent_integral: return "DivergentIntegral";
    case errc::invalid_slope: return "InvalidSlope";
    case errc::integration_failure: return "IntegrationFailure";
    case errc::rate_out_of_domain: return "RateOutOfDomain";
    case errc::out_of_support: return "OutOfSupport";
    case errc::not_censored: return "NotCensored";
    case errc::domain_too_small: return "DomainTooSmall";
    case errc::not_censorable: return "NotCensorable";
    case errc::unbounded_support: return "UnboundedSupport";
    case errc::negativity_violation: return "NegativityViolation";
    case errc::domain_violation: return "DomainViolation";
    case errc::domain_not_full: return "DomainNotFull";
    case errc::nonpositive_slope: return "NonpositiveSlope";
    case errc::invalid_variance_function: return "InvalidVarianceFunction";
    case errc::window_out_of_domain: return "WindowOutOfDomain";
    case errc::no_power_asymptotics: return "NoPowerAsymptotics";
    case errc::exponential_domain: return "ExponentialDomain";
    case errc::no_exponential_asymptotics: return "NoExponentialAsymptotics";
    case errc::invalid_argument: return "InvalidArgument";
    case errc::parse_error: return "ParseError";
    case errc::config_error: return "ConfigError";
  }
  return "UnknownError";
}

int exit_code_for(errc code) {
  switch (code) {
    case errc::numerical_error:
    case errc::divergent_integral:
    case errc::integration_failure:
    case errc::no_power_asymptotics:
    case errc::no_exponential_asymptotics:
      return 3;
    default:
      return 2;
  }
}

}  // namespace xdm
