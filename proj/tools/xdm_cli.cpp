#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "xdm/catalog.hpp"
#include "xdm/convergence.hpp"
#include "xdm/error.hpp"
#include "xdm/expr.hpp"
#include "xdm/slope.hpp"
#include "xdm/transforms.hpp"
#include "xdm/xd.hpp"

namespace {

using nlohmann::json;

std::string fmt(double x) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.17g", x);
  return buffer;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += "\"\"";
    out += c;
  }
  out += '"';
  return out;
}

std::map<std::string, double> parse_params(const std::vector<std::string>& kvs) {
  std::map<std::string, double> out;
  for (const auto& kv : kvs) {
    const auto eq = kv.find('=');
    XDM_REQUIRE(eq != std::string::npos && eq > 0, xdm::errc::invalid_argument,
                "parameters use the form name=value: " + kv);
    out[kv.substr(0, eq)] = xdm::parse_extended_real(kv.substr(eq + 1));
  }
  return out;
}

// The gev family consumes --mu/--lambda directly: its model is already the
// member, so eval and sample skip the XD construction for it.
xdm::SurvivalModel member_model(const std::string& family,
                                const std::vector<std::string>& kvs, double mu,
                                double lambda) {
  auto params = parse_params(kvs);
  if (family == "gev") {
    params["mu"] = mu;
    params["lambda"] = lambda;
    return xdm::make_family(family, params).model;
  }
  return xdm::xd_make(xdm::make_family(family, params).model, mu, lambda).member;
}

void print_model_table(std::ostream& os, const xdm::SurvivalModel& model) {
  const xdm::Interval w = xdm::probe_window(model.support());
  os << "y,survival,integrated_hazard,hazard,hazard_derivative\n";
  for (int i = 0; i < 33; ++i) {
    const double y = w.lower + i * w.width() / 32.0;
    os << fmt(y) << ',' << fmt(model.survival(y)) << ','
       << fmt(model.integrated_hazard(y)) << ',' << fmt(model.hazard(y)) << ','
       << fmt(model.hazard_derivative(y)) << '\n';
  }
}

void print_slope_report(std::ostream& os, const xdm::SlopeFunction& slope) {
  const xdm::SlopeDiagnosis diag = xdm::validate_slope(slope);
  os << "verdict,sign,domain_lower,domain_upper,left_integral,right_integral,"
        "continuity_at_a\n";
  os << csv_field(to_string(diag.verdict)) << ','
     << csv_field(to_string(slope.sign_class)) << ','
     << fmt(slope.domain.lower) << ',' << fmt(slope.domain.upper) << ','
     << fmt(diag.left_integral) << ',' << fmt(diag.right_integral) << ','
     << (diag.continuity_at_a ? "true" : "false") << '\n';
  os << '\n';
  const xdm::Interval w = xdm::probe_window(slope.domain);
  os << "mu,v\n";
  for (int i = 0; i < 33; ++i) {
    const double mu = w.lower + i * w.width() / 32.0;
    os << fmt(mu) << ',' << fmt(slope.v(mu)) << '\n';
  }
}

void print_convergence_report(std::ostream& os, const xdm::ConvergenceReport& rep) {
  os << "limit_family,compact_lower,compact_upper,tolerance,tightness_bound,"
        "passed\n";
  os << csv_field(rep.limit_family) << ',' << fmt(rep.compact_window.lower)
     << ',' << fmt(rep.compact_window.upper) << ',' << fmt(rep.tolerance) << ','
     << fmt(rep.tightness_bound) << ',' << (rep.passed ? "true" : "false")
     << '\n';
  os << '\n';
  os << "index,slope_sup_distance,survival_sup_distance,tightness_integral\n";
  for (const auto& step : rep.steps) {
    os << fmt(step.index) << ',' << fmt(step.slope_sup_distance) << ','
       << fmt(step.survival_sup_distance) << ',' << fmt(step.tightness_integral)
       << '\n';
  }
}

double json_extended_real(const json& value, const std::string& key) {
  if (value.is_string()) return xdm::parse_extended_real(value.get<std::string>());
  XDM_REQUIRE(value.is_number(), xdm::errc::config_error,
              key + " must be a number or an extended-real string");
  return value.get<double>();
}

xdm::Interval json_interval(const json& value, const std::string& key) {
  XDM_REQUIRE(value.is_array() && value.size() == 2, xdm::errc::config_error,
              key + " must be a two element array");
  return xdm::Interval(json_extended_real(value[0], key),
                       json_extended_real(value[1], key));
}

int run_converge(const std::string& config_path) {
  std::ifstream in(config_path);
  XDM_REQUIRE(in.good(), xdm::errc::config_error,
              "cannot open config file " + config_path);
  json cfg;
  try {
    in >> cfg;
  } catch (const json::exception& e) {
    xdm::raise(xdm::errc::config_error, std::string("invalid JSON: ") + e.what());
  }
  XDM_REQUIRE(cfg.is_object(), xdm::errc::config_error,
              "config must be a JSON object");

  static const std::set<std::string> allowed = {
      "command",  "family",    "parameters",      "slope_expression",
      "domain",   "mu",        "lambda",          "beta",
      "n_values", "m_values",  "window",          "p",
      "tolerance", "tightness_bound", "mu0",      "seed",
      "output_path"};
  for (const auto& item : cfg.items())
    XDM_REQUIRE(allowed.count(item.key()) > 0, xdm::errc::config_error,
                "unknown config key: " + item.key());

  XDM_REQUIRE(cfg.contains("command") && cfg["command"].is_string(),
              xdm::errc::config_error, "command must be \"gev\" or \"expslope\"");
  const std::string command = cfg["command"].get<std::string>();
  XDM_REQUIRE(command == "gev" || command == "expslope", xdm::errc::config_error,
              "command must be \"gev\" or \"expslope\"");
  XDM_REQUIRE(cfg.contains("mu") && cfg["mu"].is_number(), xdm::errc::config_error,
              "mu is required and must be a number");
  XDM_REQUIRE(cfg.contains("lambda") && cfg["lambda"].is_number(),
              xdm::errc::config_error, "lambda is required and must be a number");
  const double mu = cfg["mu"].get<double>();
  const double lambda = cfg["lambda"].get<double>();

  const bool has_family = cfg.contains("family");
  const bool has_expr = cfg.contains("slope_expression");
  XDM_REQUIRE(has_family != has_expr, xdm::errc::config_error,
              "exactly one of family and slope_expression is required");
  XDM_REQUIRE(!cfg.contains("parameters") || has_family, xdm::errc::config_error,
              "parameters requires family");
  XDM_REQUIRE(!cfg.contains("domain") || has_expr, xdm::errc::config_error,
              "domain requires slope_expression");
  XDM_REQUIRE(!cfg.contains("mu0") || has_expr, xdm::errc::config_error,
              "mu0 requires slope_expression");

  std::optional<xdm::SurvivalModel> generator;
  if (has_family) {
    XDM_REQUIRE(cfg["family"].is_string(), xdm::errc::config_error,
                "family must be a string");
    const std::string family = cfg["family"].get<std::string>();
    std::map<std::string, double> params;
    if (cfg.contains("parameters")) {
      XDM_REQUIRE(cfg["parameters"].is_object(), xdm::errc::config_error,
                  "parameters must be an object");
      for (const auto& item : cfg["parameters"].items()) {
        XDM_REQUIRE(item.value().is_number(), xdm::errc::config_error,
                    "parameter " + item.key() + " must be a number");
        params[item.key()] = item.value().get<double>();
      }
    }
    if (family == "gev") {
      params["mu"] = mu;
      params["lambda"] = lambda;
    }
    generator = xdm::make_family(family, params).model;
  } else {
    XDM_REQUIRE(cfg["slope_expression"].is_string(), xdm::errc::config_error,
                "slope_expression must be a string");
    XDM_REQUIRE(cfg.contains("domain"), xdm::errc::config_error,
                "slope_expression requires domain");
    const xdm::Interval domain = json_interval(cfg["domain"], "domain");
    const xdm::SlopeFunction slope = xdm::make_slope(
        xdm::parse_slope_expression(cfg["slope_expression"].get<std::string>()),
        domain);
    double mu0 = domain.anchor();
    if (cfg.contains("mu0")) {
      XDM_REQUIRE(cfg["mu0"].is_number(), xdm::errc::config_error,
                  "mu0 must be a number");
      mu0 = cfg["mu0"].get<double>();
    }
    generator = xdm::reconstruct_from_slope(slope, mu0).generator;
  }

  std::optional<xdm::Interval> window;
  if (cfg.contains("window")) window = json_interval(cfg["window"], "window");
  double tolerance = 1e-2;
  if (cfg.contains("tolerance")) {
    XDM_REQUIRE(cfg["tolerance"].is_number(), xdm::errc::config_error,
                "tolerance must be a number");
    tolerance = cfg["tolerance"].get<double>();
  }
  std::optional<double> tightness_bound;
  if (cfg.contains("tightness_bound")) {
    XDM_REQUIRE(cfg["tightness_bound"].is_number(), xdm::errc::config_error,
                "tightness_bound must be a number");
    tightness_bound = cfg["tightness_bound"].get<double>();
  }
  if (cfg.contains("seed"))
    XDM_REQUIRE(cfg["seed"].is_number_integer(), xdm::errc::config_error,
                "seed must be an integer");

  xdm::ConvergenceReport report;
  if (command == "gev") {
    XDM_REQUIRE(!cfg.contains("beta") && !cfg.contains("m_values"),
                xdm::errc::config_error,
                "beta and m_values apply to the expslope command only");
    XDM_REQUIRE(cfg.contains("n_values") && cfg["n_values"].is_array(),
                xdm::errc::config_error, "n_values is required and must be an array");
    xdm::GevOptions options;
    for (const auto& value : cfg["n_values"]) {
      XDM_REQUIRE(value.is_number_integer(), xdm::errc::config_error,
                  "n_values entries must be integers");
      options.n_values.push_back(value.get<long long>());
    }
    if (cfg.contains("p")) {
      XDM_REQUIRE(cfg["p"].is_number(), xdm::errc::config_error,
                  "p must be a number");
      options.p = cfg["p"].get<double>();
    }
    options.window = window;
    options.tolerance = tolerance;
    options.tightness_bound = tightness_bound;
    report = xdm::gev_convergence_experiment(*generator, mu, lambda, options);
  } else {
    XDM_REQUIRE(!cfg.contains("n_values") && !cfg.contains("p"),
                xdm::errc::config_error,
                "n_values and p apply to the gev command only");
    XDM_REQUIRE(cfg.contains("beta") && cfg["beta"].is_number(),
                xdm::errc::config_error, "beta is required and must be a number");
    XDM_REQUIRE(cfg.contains("m_values") && cfg["m_values"].is_array(),
                xdm::errc::config_error, "m_values is required and must be an array");
    xdm::ExpSlopeOptions options;
    for (const auto& value : cfg["m_values"]) {
      XDM_REQUIRE(value.is_number(), xdm::errc::config_error,
                  "m_values entries must be numbers");
      options.m_values.push_back(value.get<double>());
    }
    options.window = window;
    options.tolerance = tolerance;
    options.tightness_bound = tightness_bound;
    report = xdm::exp_slope_convergence_experiment(
        *generator, mu, lambda, cfg["beta"].get<double>(), options);
  }

  if (cfg.contains("output_path")) {
    XDM_REQUIRE(cfg["output_path"].is_string(), xdm::errc::config_error,
                "output_path must be a string");
    std::ofstream out(cfg["output_path"].get<std::string>());
    XDM_REQUIRE(out.good(), xdm::errc::config_error,
                "cannot open output file " + cfg["output_path"].get<std::string>());
    print_convergence_report(out, report);
  } else {
    print_convergence_report(std::cout, report);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"slope function calculus for extreme dispersion models"};
  app.require_subcommand(1);

  auto* catalog_cmd = app.add_subcommand("catalog", "built in family catalog");
  catalog_cmd->require_subcommand(1);
  catalog_cmd->add_subcommand("list", "print the family names");

  std::string family;
  double mu = 0.0, lambda = 0.0;
  std::vector<double> at_values;
  std::vector<std::string> kvs;
  auto* eval_cmd =
      app.add_subcommand("eval", "evaluate an XD member on points");
  eval_cmd->add_option("--family", family)->required();
  eval_cmd->add_option("--mu", mu)->required();
  eval_cmd->add_option("--lambda", lambda)->required();
  eval_cmd->add_option("--at", at_values)->required();
  eval_cmd->add_option("--param", kvs);

  std::string expr;
  std::vector<std::string> domain_raw;
  auto* slope_cmd =
      app.add_subcommand("slope", "diagnose a slope function and print it");
  slope_cmd->add_option("--family", family);
  slope_cmd->add_option("--expr", expr);
  slope_cmd->add_option("--domain", domain_raw)->expected(2);
  slope_cmd->add_option("--param", kvs);

  double mu0 = 0.0;
  auto* reconstruct_cmd = app.add_subcommand(
      "reconstruct", "rebuild a distribution from a slope expression");
  reconstruct_cmd->add_option("--expr", expr)->required();
  reconstruct_cmd->add_option("--domain", domain_raw)->required()->expected(2);
  reconstruct_cmd->add_option("--mu0", mu0)->required();

  long long sample_n = 0;
  std::uint64_t seed = 0;
  auto* sample_cmd = app.add_subcommand("sample", "draw from an XD member");
  sample_cmd->add_option("--family", family)->required();
  sample_cmd->add_option("--mu", mu)->required();
  sample_cmd->add_option("--lambda", lambda)->required();
  sample_cmd->add_option("--n", sample_n)->required();
  sample_cmd->add_option("--seed", seed)->required();
  sample_cmd->add_option("--param", kvs);

  std::string op;
  double at_point = 0.0;
  auto* transform_cmd =
      app.add_subcommand("transform", "apply a transformation to a family");
  transform_cmd->add_option("--op", op)
      ->required()
      ->check(CLI::IsMember(
          {"truncate", "censor", "hreflect", "vreflect", "addexp", "shift"}));
  transform_cmd->add_option("--family", family)->required();
  transform_cmd->add_option("--at", at_point);
  transform_cmd->add_option("--mu", mu);
  transform_cmd->add_option("--lambda", lambda);
  transform_cmd->add_option("--param", kvs);

  std::string config_path;
  auto* converge_cmd =
      app.add_subcommand("converge", "run a convergence experiment");
  converge_cmd->add_option("--config", config_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (catalog_cmd->parsed()) {
      std::cout << "family\n";
      for (const auto& name : xdm::catalog_names())
        std::cout << csv_field(name) << '\n';
      return 0;
    }
    if (eval_cmd->parsed()) {
      const xdm::SurvivalModel member = member_model(family, kvs, mu, lambda);
      std::cout << "y,survival,integrated_hazard,hazard,hazard_derivative\n";
      for (const double y : at_values) {
        std::cout << fmt(y) << ',' << fmt(member.survival(y)) << ','
                  << fmt(member.integrated_hazard(y)) << ','
                  << fmt(member.hazard(y)) << ','
                  << fmt(member.hazard_derivative(y)) << '\n';
      }
      return 0;
    }
    if (slope_cmd->parsed()) {
      const bool has_family = !family.empty();
      const bool has_expr = !expr.empty();
      XDM_REQUIRE(has_family != has_expr, xdm::errc::invalid_argument,
                  "pass exactly one of --family and --expr");
      if (has_family) {
        auto params = parse_params(kvs);
        if (family == "gev") {
          if (!params.count("mu")) params["mu"] = 1.0;
          if (!params.count("lambda")) params["lambda"] = 1.0;
        }
        print_slope_report(std::cout,
                           xdm::make_family(family, params).slope_closed_form);
      } else {
        XDM_REQUIRE(domain_raw.size() == 2, xdm::errc::invalid_argument,
                    "--expr requires --domain LO HI");
        const xdm::Interval domain(xdm::parse_extended_real(domain_raw[0]),
                                   xdm::parse_extended_real(domain_raw[1]));
        print_slope_report(
            std::cout,
            xdm::make_slope(xdm::parse_slope_expression(expr), domain));
      }
      return 0;
    }
    if (reconstruct_cmd->parsed()) {
      const xdm::Interval domain(xdm::parse_extended_real(domain_raw[0]),
                                 xdm::parse_extended_real(domain_raw[1]));
      const xdm::SlopeFunction slope =
          xdm::make_slope(xdm::parse_slope_expression(expr), domain);
      const xdm::HazardLocationFamily fam =
          xdm::reconstruct_from_slope(slope, mu0);
      const xdm::Interval w = xdm::probe_window(fam.generator.support());
      std::cout << "y,survival,hazard\n";
      for (int i = 0; i < 33; ++i) {
        const double y = w.lower + i * w.width() / 32.0;
        std::cout << fmt(y) << ',' << fmt(fam.generator.survival(y)) << ','
                  << fmt(fam.generator.hazard(y)) << '\n';
      }
      return 0;
    }
    if (sample_cmd->parsed()) {
      const xdm::SurvivalModel member = member_model(family, kvs, mu, lambda);
      const Eigen::ArrayXd draws = xdm::sample(member, sample_n, seed);
      std::cout << "value\n";
      for (Eigen::Index i = 0; i < draws.size(); ++i)
        std::cout << fmt(draws[i]) << '\n';
      return 0;
    }
    if (transform_cmd->parsed()) {
      auto params = parse_params(kvs);
      if (family == "gev") {
        if (!params.count("mu")) params["mu"] = 1.0;
        if (!params.count("lambda")) params["lambda"] = 1.0;
      }
      const xdm::SurvivalModel base = xdm::make_family(family, params).model;
      if (op == "shift") {
        XDM_REQUIRE(transform_cmd->count("--mu") && transform_cmd->count("--lambda"),
                    xdm::errc::invalid_argument,
                    "shift requires --mu and --lambda");
        XDM_REQUIRE(transform_cmd->count("--at"), xdm::errc::invalid_argument,
                    "shift requires --at for the level");
        const xdm::XDModel shifted =
            xdm::shift_transform(xdm::xd_make(base, mu, lambda), at_point);
        print_model_table(std::cout, shifted.member);
        return 0;
      }
      XDM_REQUIRE(op == "hreflect" || transform_cmd->count("--at"),
                  xdm::errc::invalid_argument, op + " requires --at");
      xdm::SurvivalModel result = [&] {
        if (op == "truncate") return xdm::truncate_left(base, at_point);
        if (op == "censor") return xdm::censor_right(base, at_point);
        if (op == "hreflect") return xdm::reflect_horizontal(base);
        if (op == "vreflect") return xdm::reflect_vertical(base, at_point);
        return xdm::add_exponential_component(base, at_point);
      }();
      print_model_table(std::cout, result);
      return 0;
    }
    if (converge_cmd->parsed()) return run_converge(config_path);
  } catch (const xdm::error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return xdm::exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
