#include "zetaforms/cli/commands.hpp"

#include <fmt/format.h>

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "zetaforms/asymptotics/bounds.hpp"
#include "zetaforms/asymptotics/rates.hpp"
#include "zetaforms/errors.hpp"
#include "zetaforms/exact/lcm_table.hpp"
#include "zetaforms/partial_fractions/partial_fractions.hpp"
#include "zetaforms/reals/linear_form.hpp"
#include "zetaforms/reals/mc_integral.hpp"
#include "zetaforms/reals/series_eval.hpp"

namespace zetaforms::cli {
namespace {

using nlohmann::json;

FormParams params_for(const RunConfig& config, int n) {
  return FormParams::make(config.a, config.resolved_r(), n);
}

void require_odd_a(const RunConfig& config) {
  if (config.a < 3 || config.a % 2 == 0) {
    throw DomainError("a must be odd and >= 3 for the z = 1 route, got " + std::to_string(config.a));
  }
}

std::string fmt_double(double x) { return fmt::format("{:.10g}", x); }

/// log of max_i |d_n^a P_i(1)|, i = 0..a.
double log_max_coefficient(const FormParams& params) {
  const auto scaled = integer_scaled(decompose(params));
  const BigInt& d = lcm_upto(static_cast<std::size_t>(params.n));
  BigInt best = 0;
  for (std::size_t i = 0; i < scaled.size(); ++i) {
    BigInt dp;
    mpz_pow_ui(dp.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(i));
    BigInt v = scaled[i] * dp;
    v = abs(v);
    if (v > best) best = v;
  }
  if (best == 0) return -HUGE_VAL;
  return Real(best, 64).log2_abs() * std::numbers::ln2;
}

}  // namespace

int cmd_forms(const RunConfig& config, std::ostream& out, std::ostream& err) {
  require_odd_a(config);
  if (config.n_max < 0) throw DomainError("--nmax must be >= 0");
  json forms = json::array();
  std::vector<IntegerLinearForm> built;
  for (int n = 0; n <= config.n_max; n += 2) {
    try {
      built.push_back(build_linear_form(params_for(config, n), config.precision_bits));
    } catch (const ResidualFailure& e) {
      err << "forms: " << e.what() << "\n";
      return kExitCheckFailed;
    }
  }
  if (config.output == OutputFormat::kCsv) {
    out << "n,p0";
    for (int i = 3; i <= config.a; i += 2) out << ",p_zeta" << i;
    out << ",ell,residual\n";
    for (const auto& f : built) {
      out << f.params.n << "," << f.p0.get_str();
      for (const auto& p : f.p) out << "," << p.get_str();
      const auto j = form_to_json(f);
      out << "," << j["ell"].get<std::string>() << "," << j["residual"].get<std::string>() << "\n";
    }
    return kExitOk;
  }
  for (const auto& f : built) forms.push_back(form_to_json(f));
  out << forms.dump(2) << "\n";
  return kExitOk;
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (config.n_max < 0) throw DomainError("--nmax must be >= 0");
  const Rational z_check = [&] {
    const Rational z = Rational::parse(config.z);
    return z > Rational(1) ? z : Rational(2);
  }();
  json checks = json::array();
  bool all_pass = true;
  auto record = [&](const char* name, int n, bool pass) {
    checks.push_back({{"check", name}, {"n", n}, {"pass", pass}});
    if (!pass) {
      all_pass = false;
      err << "verify: " << name << " failed at n=" << n << "\n";
    }
  };

  for (int n = 0; n <= config.n_max; ++n) {
    const FormParams params = params_for(config, n);
    PartialFractionTable table = decompose(params);
    if (config.inject_mutation) table = perturbed(table, 1, 0, Rational(1));

    record("reconstruction", n,
           check_reconstruction(table, 3 * static_cast<std::size_t>(params.a) * (n + 1), config.seed));
    record("symmetry", n, check_symmetry(table));
    record("p1_vanishes", n, p_poly_eval(table, 1, 1).is_zero());
    if (params.odd_route()) {
      bool even_zero = true;
      for (int i = 2; i <= params.a; i += 2) even_zero = even_zero && p_poly_eval(table, i, 1).is_zero();
      record("even_vanishing", n, even_zero);
    }
    bool integral = coefficients_integral(table);
    try {
      (void)integer_scaled(table);
    } catch (const InvariantViolation&) {
      integral = false;
    }
    record("integrality", n, integral);
    if (params.odd_route()) {
      bool ok = true;
      try {
        const auto form = build_linear_form(params, config.precision_bits);
        ok = residual_ok(form.residual, config.precision_bits);
      } catch (const ResidualFailure&) {
        ok = false;
      }
      record("residual", n, ok);
    }
    const Real residual = verify_identity_at_z(params, z_check, config.precision_bits);
    record("identity_at_z", n,
           residual.log2_abs() < -static_cast<double>(config.precision_bits) + 8.0);
  }

  const json report = {{"a", config.a},
                       {"r", config.resolved_r()},
                       {"n_max", config.n_max},
                       {"z", z_check.str()},
                       {"checks", std::move(checks)},
                       {"all_pass", all_pass}};
  out << report.dump(2) << "\n";
  return all_pass ? kExitOk : kExitCheckFailed;
}

int cmd_rates(const RunConfig& config, std::ostream& out, std::ostream& /*err*/) {
  if (config.n_max < 6) throw DomainError("rates needs --nmax >= 6");
  const int r = config.resolved_r();
  FormParams::make(config.a, r, 0);
  const double s_line = std::exp(s_bound(r, config.a).log_value);
  const double p_line = std::exp(config.a + log_p_growth_bound(r, config.a));

  std::vector<RatePoint> s_points;
  std::vector<RatePoint> p_points;
  for (int n = 2; n <= config.n_max; n += 2) {
    const FormParams params = params_for(config, n);
    const Real s = eval_S(params, 1, config.precision_bits + 4L * n);
    s_points.push_back({n, s.log2_abs() * std::numbers::ln2});
    p_points.push_back({n, log_max_coefficient(params)});
  }
  auto root = [](const RatePoint& p) { return std::exp(p.log_magnitude / static_cast<double>(p.n)); };

  if (config.output == OutputFormat::kJson) {
    json rows = json::array();
    for (std::size_t k = 0; k < s_points.size(); ++k) {
      rows.push_back({{"n", s_points[k].n}, {"s_root", root(s_points[k])}, {"p_root", root(p_points[k])}});
    }
    const auto ratio = empirical_rate(s_points, RateMethod::kRatioTest);
    const json report = {{"a", config.a},
                         {"r", r},
                         {"s_bound", s_line},
                         {"p_bound", p_line},
                         {"rows", std::move(rows)},
                         {"s_root_test", empirical_rate(s_points, RateMethod::kRootTest).estimate},
                         {"s_ratio_test", ratio.estimate},
                         {"s_ratio_spread", ratio.spread}};
    out << report.dump(2) << "\n";
    return kExitOk;
  }
  out << "n,s_root,p_root,s_bound,p_bound\n";
  for (std::size_t k = 0; k < s_points.size(); ++k) {
    out << s_points[k].n << "," << fmt_double(root(s_points[k])) << "," << fmt_double(root(p_points[k]))
        << "," << fmt_double(s_line) << "," << fmt_double(p_line) << "\n";
  }
  return kExitOk;
}

int cmd_bound(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (config.find_dim) {
    long a = 0;
    try {
      a = min_a_for_dim(*config.find_dim);
    } catch (const ScanCapExceeded& e) {
      err << "bound: " << e.what() << "\n";
      return kExitResource;
    }
    const json report = {{"target", *config.find_dim}, {"a", a}, {"report", report_to_json(optimize_r(a))}};
    out << report.dump(2) << "\n";
    return kExitOk;
  }

  if (config.grid) {
    const auto colon = config.grid->find(':');
    if (colon == std::string::npos) throw DomainError("--grid expects lo:hi, e.g. 1e3:1e9");
    double lo = 0;
    double hi = 0;
    try {
      lo = std::stod(config.grid->substr(0, colon));
      hi = std::stod(config.grid->substr(colon + 1));
    } catch (const std::exception&) {
      throw DomainError("malformed --grid '" + *config.grid + "'");
    }
    if (!(lo >= 10 && hi >= lo && hi <= 2e9)) throw DomainError("--grid needs 10 <= lo <= hi <= 2e9");
    std::vector<long> grid;
    for (double a = lo; a <= hi * (1 + 1e-12); a *= 10) grid.push_back(std::lround(a));
    const auto points = asymptotic_check(grid);
    bool increasing = true;
    json rows = json::array();
    for (std::size_t k = 0; k < points.size(); ++k) {
      if (k > 0 && !(points[k].ratio > points[k - 1].ratio)) increasing = false;
      rows.push_back({{"a", points[k].a},
                      {"r", points[k].r},
                      {"delta_lb", points[k].delta_lb},
                      {"ratio", points[k].ratio}});
    }
    if (config.output == OutputFormat::kCsv) {
      out << "a,r,delta_lb,ratio\n";
      for (const auto& p : points) {
        out << p.a << "," << p.r << "," << fmt_double(p.delta_lb) << "," << fmt_double(p.ratio) << "\n";
      }
      return kExitOk;
    }
    const json report = {{"slope", theorem_slope()}, {"points", std::move(rows)}, {"increasing", increasing}};
    out << report.dump(2) << "\n";
    return kExitOk;
  }

  require_odd_a(config);
  const BoundReport rep = config.r ? bound_report(config.a, *config.r) : optimize_r(config.a);
  if (config.output == OutputFormat::kCsv) {
    out << "a,r,f,g,delta_lb,log_alpha,log_beta\n"
        << rep.a << "," << rep.r << "," << fmt_double(rep.f) << "," << fmt_double(rep.g) << ","
        << fmt_double(rep.delta_lb) << "," << fmt_double(rep.log_alpha) << "," << fmt_double(rep.log_beta)
        << "\n";
    return kExitOk;
  }
  out << report_to_json(rep).dump(2) << "\n";
  return kExitOk;
}

int cmd_integral(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (config.samples < 10'000) throw DomainError("--samples must be >= 10000");
  const FormParams params = params_for(config, config.n);
  const Rational z = Rational::parse(config.z);
  const McEstimate mc = mc_integral(params, z, config.samples, config.seed);
  const double series = eval_S(params, z, 64).to_double();
  const double z_score = (mc.estimate - series) / mc.standard_error;
  const bool pass = std::fabs(z_score) <= 3.0;
  const json report = {{"a", params.a},
                       {"r", params.r},
                       {"n", params.n},
                       {"z", z.str()},
                       {"samples", mc.samples},
                       {"seed", config.seed},
                       {"estimate", mc.estimate},
                       {"standard_error", mc.standard_error},
                       {"series", series},
                       {"z_score", z_score},
                       {"pass", pass}};
  out << report.dump(2) << "\n";
  if (!pass) err << "integral: |z-score| = " << std::fabs(z_score) << " exceeds 3\n";
  return pass ? kExitOk : kExitCheckFailed;
}

namespace {

int dispatch(const RunConfig& config, std::ostream& out, std::ostream& err) {
  switch (config.command) {
    case Command::kForms:
      return cmd_forms(config, out, err);
    case Command::kVerify:
      return cmd_verify(config, out, err);
    case Command::kRates:
      return cmd_rates(config, out, err);
    case Command::kBound:
      return cmd_bound(config, out, err);
    case Command::kIntegral:
      return cmd_integral(config, out, err);
  }
  return kExitUsage;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  CLI::App app{"Rational linear forms in 1 and odd zeta values, and dimension lower bounds"};
  app.require_subcommand(1);

  std::optional<long> precision;
  std::string output = "json";
  std::optional<int> r;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--r", r, "acceleration parameter (default: nearest integer to a/(log a)^2)");
    sub->add_option("--prec", precision, "target precision in bits (default 256)");
    sub->add_option("--output", output, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", config.out_path, "write the report to this file");
  };

  auto* forms = app.add_subcommand("forms", "integer linear forms for even n <= nmax");
  forms->add_option("--a", config.a, "zeta height (odd, >= 3)")->required();
  forms->add_option("--nmax", config.n_max, "largest (even) index n");
  auto* mmax = forms->add_option("--mmax", "emit forms for n = 2m, m = 0..mmax");
  add_common(forms);

  auto* verify = app.add_subcommand("verify", "exact and numerical invariant checks");
  verify->add_option("--a", config.a)->required();
  verify->add_option("--nmax", config.n_max, "check every n <= nmax");
  verify->add_option("--z", config.z, "rational z > 1 for the identity check (default 2)");
  verify->add_option("--seed", config.seed, "seed for random reconstruction points");
  verify->add_flag("--inject-mutation", config.inject_mutation, "perturb c[1][0] by +1 (test hook)");
  add_common(verify);

  auto* rates = app.add_subcommand("rates", "empirical growth rates against the bounds");
  rates->add_option("--a", config.a)->required();
  rates->add_option("--nmax", config.n_max)->required();
  add_common(rates);

  auto* bound = app.add_subcommand("bound", "dimension lower bound with optimized r");
  auto* bound_a = bound->add_option("--a", config.a, "odd zeta height");
  bound->add_option("--grid", config.grid, "decade grid lo:hi, e.g. 1e3:1e9");
  bound->add_option("--find-dim", config.find_dim, "smallest odd a with delta_lb >= T");
  add_common(bound);

  auto* integral = app.add_subcommand("integral", "Monte-Carlo check of the integral representation");
  integral->add_option("--a", config.a)->required();
  integral->add_option("--n", config.n)->required();
  integral->add_option("--z", config.z, "rational z >= 1 as p/q (default 1)");
  integral->add_option("--samples", config.samples, "number of samples (>= 10^4)");
  integral->add_option("--seed", config.seed);
  add_common(integral);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }

  try {
    config.r = r;
    config.output = output == "csv" ? OutputFormat::kCsv : OutputFormat::kJson;
    config.precision_bits = precision ? *precision : default_precision_bits();
    if (config.precision_bits < 16) throw DomainError("--prec must be >= 16");
    if (forms->parsed()) {
      config.command = Command::kForms;
      if (mmax->count() > 0) config.n_max = 2 * mmax->as<int>();
    } else if (verify->parsed()) {
      config.command = Command::kVerify;
    } else if (rates->parsed()) {
      config.command = Command::kRates;
    } else if (bound->parsed()) {
      config.command = Command::kBound;
      config.a_given = bound_a->count() > 0;
      if (!config.a_given && !config.grid && !config.find_dim) {
        throw DomainError("bound needs one of --a, --grid, --find-dim");
      }
    } else {
      config.command = Command::kIntegral;
    }

    if (!config.out_path) return dispatch(config, out, err);
    std::ostringstream buffer;
    const int code = dispatch(config, buffer, err);
    std::ofstream file(*config.out_path);
    if (!file) {
      err << "cannot open " << *config.out_path << "\n";
      return kExitResource;
    }
    file << buffer.str();
    return code;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvariantViolation& e) {
    err << "check failed: " << e.what() << "\n";
    return kExitCheckFailed;
  } catch (const ResidualFailure& e) {
    err << "check failed: " << e.what() << "\n";
    return kExitCheckFailed;
  } catch (const PrecisionUnreachable& e) {
    err << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const ScanCapExceeded& e) {
    err << "resource limit: " << e.what() << "\n";
    return kExitResource;
  }
}

}  // namespace zetaforms::cli
