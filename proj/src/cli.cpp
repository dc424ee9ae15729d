#include "gybe/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <optional>
#include <random>
#include <regex>
#include <sstream>

#include "gybe/entangled_states.hpp"
#include "gybe/gybe_solutions.hpp"
#include "gybe/report.hpp"

namespace gybe::cli {
namespace {

using nlohmann::json;

struct RunConfig {
  int m = 2;
  int N = 2;
  int z = 1;
  int n = 3;
  int k = 0;
  int generator = 1;
  std::vector<std::string> a_values;
  std::string a_range;
  std::uint64_t seed = 7;
  int samples = 5;
  double tolerance = 1e-9;
  std::string format = "json";
  std::string out_path;
};

// Configuration problems detected before any computation; mapped to exit 2.
class ConfigError : public Error {
 public:
  using Error::Error;
};

json parameter_to_json(double a) {
  if (std::isinf(a)) return a > 0 ? "inf" : "-inf";
  return a;
}

std::vector<double> collect_parameters(const RunConfig& rc, std::vector<double> fallback) {
  std::vector<double> grid;
  for (const auto& text : rc.a_values) grid.push_back(parse_parameter(text));
  if (!rc.a_range.empty()) {
    const auto range = parse_a_range(rc.a_range);
    grid.insert(grid.end(), range.begin(), range.end());
  }
  return grid.empty() ? fallback : grid;
}

void validate_levels(const RunConfig& rc) {
  if (rc.m < 2) throw ConfigError("m must be >= 2");
  if (rc.N < 2) throw ConfigError("N must be >= 2");
  if (rc.z < 1) throw ConfigError("z must be >= 1");
  if (rc.n < 2) throw ConfigError("n must be >= 2");
  if (rc.k < 0 || rc.k >= rc.m) throw ConfigError("k must lie in [0, m)");
  if (rc.tolerance <= 0.0 || !std::isfinite(rc.tolerance)) throw ConfigError("tolerance must be positive");
}

void validate_system(const RunConfig& rc) {
  validate_levels(rc);
  check_window(rc.N, rc.z);
  const std::size_t arity = static_cast<std::size_t>(rc.N + rc.z * (rc.n - 2));
  require_within_cap(ipow(static_cast<std::size_t>(rc.m), arity), "system dimension m^{N+z(n-2)}");
}

class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw ConfigError("cannot open output file '" + path + "'");
      stream_ = &file_;
    }
  }
  std::ostream& get() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

// Draw a real parameter from [-4, 4] keeping clear of +-1.
double draw_parameter(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> dist(-4.0, 4.0);
  for (;;) {
    const double a = dist(rng);
    if (std::abs(a - 1.0) >= 1e-6 && std::abs(a + 1.0) >= 1e-6) return a;
  }
}

int cmd_coeffs(const RunConfig& rc, std::ostream& out) {
  validate_levels(rc);
  const ModulusConfig cfg(rc.m);
  const auto grid = collect_parameters(rc, {0.0});
  Output o(rc.out_path, out);
  auto& os = o.get();
  if (rc.format == "csv") {
    os << "a,kind,j,re,im\n" << std::setprecision(17);
    for (double a : grid) {
      const auto c = x_tilde(cfg, a);
      for (int j = 0; j < rc.m; ++j) {
        os << a << ',' << to_string(c.kind) << ',' << j << ',' << c.values[j].real() << ',' << c.values[j].imag() << '\n';
      }
    }
    return kOk;
  }
  json rows = json::array();
  for (double a : grid) {
    const auto c = x_tilde(cfg, a);
    for (int j = 0; j < rc.m; ++j) {
      rows.push_back({{"a", parameter_to_json(a)},
                      {"kind", std::string(to_string(c.kind))},
                      {"j", j},
                      {"re", c.values[j].real()},
                      {"im", c.values[j].imag()}});
    }
  }
  os << json{{"m", rc.m}, {"rows", rows}}.dump(2) << '\n';
  return kOk;
}

ResidualReport run_verify_suite(const RunConfig& rc) {
  const ModulusConfig cfg(rc.m);
  const double tol = rc.tolerance;
  std::mt19937_64 rng(rc.seed);
  ResidualReport report;
  const json sys_params = {{"m", rc.m}, {"N", rc.N}, {"z", rc.z}, {"n", rc.n}};

  const ParamOperatorFamily fam(build_site_system(cfg, rc.N, rc.z, rc.n));
  const int count = fam.generator_count();

  const TorusReport torus = verify_torus_relations(fam.system());
  report.add(make_record("E1 T_i^m = Id", sys_params, torus.e1, tol));
  if (torus.e2_pairs > 0) report.add(make_record("E2 far commutation of T_i", sys_params, torus.e2, tol));
  if (torus.e3_pairs > 0) report.add(make_record("E3 T_i T_{i+1} = q^2 T_{i+1} T_i", sys_params, torus.e3, tol));
  for (int i = 1; i <= count; ++i) {
    json p = sys_params;
    p["i"] = i;
    report.add(make_record("generator unitarity", p, unitarity_residual(fam.system().monomial(i)), tol));
  }

  // Scalar identities.
  std::uniform_real_distribution<double> alpha_dist(-3.0, 3.0);
  for (int s = 0; s < rc.samples; ++s) {
    const double al = alpha_dist(rng);
    const double alp = alpha_dist(rng);
    double worst = 0.0;
    for (int n1 = 0; n1 < rc.m; ++n1) {
      for (int n2 = 0; n2 < rc.m; ++n2) {
        worst = std::max(worst, verify_star_triangle_coefficients(cfg, n1, n2, al, alp));
      }
    }
    report.add(make_record("star-triangle coefficient identity", {{"m", rc.m}, {"alpha", al}, {"alpha_prime", alp}},
                           worst, tol));
  }
  for (int s = 0; s < rc.samples; ++s) {
    double a = draw_parameter(rng);
    while (std::abs(a) < 1e-3) a = draw_parameter(rng);
    double worst = 0.0;
    for (int j = 0; j < rc.m; ++j) worst = std::max(worst, verify_unitarity_sum(cfg, a, j));
    report.add(make_record("coefficient unitarity sums", {{"m", rc.m}, {"a", a}}, worst, tol));
  }

  // Operator identities.
  for (int i = 1; i + 1 <= count; ++i) {
    for (int s = 0; s < rc.samples; ++s) {
      const double a = draw_parameter(rng);
      const double b = draw_parameter(rng);
      json p = sys_params;
      p.update({{"i", i}, {"a", a}, {"b", b}});
      report.add(make_record("multiplicative YBE of R~_i(a)", p, check_mult_ybe(fam, i, a, b), tol));
    }
    for (int s = 0; s < rc.samples; ++s) {
      const double al = alpha_dist(rng);
      const double alp = alpha_dist(rng);
      json p = sys_params;
      p.update({{"i", i}, {"alpha", al}, {"alpha_prime", alp}});
      report.add(make_record("additive YBE of R_i(alpha)", p, check_additive_ybe(fam, i, al, alp), tol));
    }
  }
  for (int i = 1; i <= count; ++i) {
    for (int j = i + 2; j <= count; ++j) {
      const double a = draw_parameter(rng);
      const double b = draw_parameter(rng);
      json p = sys_params;
      p.update({{"i", i}, {"j", j}, {"a", a}, {"b", b}});
      report.add(make_record("far commutativity of R~_i(a)", p, check_far_commutativity(fam, i, j, a, b), tol));
    }
  }

  std::vector<double> grid;
  for (int g = 0; g <= 40; ++g) grid.push_back(-5.0 + 0.25 * g);
  grid.push_back(std::numeric_limits<double>::infinity());
  grid.push_back(-std::numeric_limits<double>::infinity());
  const UnitaryFamilyReport unitary = check_unitary_family(fam, grid);
  {
    json p = sys_params;
    p.update({{"grid", "41 points on [-5, 5] plus +-inf"}, {"worst_a", parameter_to_json(unitary.worst_a)}});
    report.add(make_record("unitarity of R~_i(a)", p, unitary.max_residual, tol));
  }

  const ComplexMatrix site = gaussian_site_operator(cfg, rc.N);
  const GybeResidual gybe = check_gybe(cfg, rc.N, rc.z, site);
  report.add(make_record("generalized YBE of the Gaussian site operator", sys_params, gybe.ybe, tol));
  report.add(make_record("far commutativity of the Gaussian site operator", sys_params, gybe.far, tol));

  if (count >= 2) {
    const BraidReport braid = check_braid_relations(fam);
    report.add(make_record("braid relation S_i S_{i+1} S_i", sys_params, braid.braid, tol));
    if (count >= 3) report.add(make_record("braid far commutation S_i S_j", sys_params, braid.far, tol));
    for (const auto& sp : braid.special_points) {
      json p = sys_params;
      p["a"] = parameter_to_json(sp.a);
      report.add(make_record("braid relation of R~(a) at special point", p, sp.braid, tol));
    }
  }
  return report;
}

int cmd_verify(const RunConfig& rc, std::ostream& out) {
  validate_system(rc);
  if (rc.samples < 1) throw ConfigError("samples must be >= 1");
  const ResidualReport report = run_verify_suite(rc);
  Output o(rc.out_path, out);
  auto& os = o.get();
  if (rc.format == "csv") {
    os << "relation,residual,tolerance,pass,params\n" << std::setprecision(6);
    for (const auto& r : report.records()) {
      os << '"' << r.relation << "\"," << r.residual << ',' << r.tolerance << ',' << (r.pass ? "true" : "false") << ",\""
         << std::regex_replace(r.params.dump(), std::regex("\""), "\"\"") << "\"\n";
    }
  } else {
    const json doc = {{"config", {{"m", rc.m}, {"N", rc.N}, {"z", rc.z}, {"n", rc.n}}},
                      {"seed", rc.seed},
                      {"tolerance", rc.tolerance},
                      {"records", report.to_json()},
                      {"failures", report.failures()},
                      {"pass", report.all_pass()}};
    os << doc.dump(2) << '\n';
  }
  return report.all_pass() ? kOk : kResidualFailure;
}

int cmd_states(const RunConfig& rc, std::ostream& out) {
  validate_levels(rc);
  require_within_cap(ipow(static_cast<std::size_t>(rc.m), static_cast<std::size_t>(rc.N)), "m^N");
  const ModulusConfig cfg(rc.m);
  const GhzLikeState state = apply_to_product_state(gaussian_site_operator(cfg, rc.N), rc.m, rc.N, rc.k);
  const bool odd = rc.m % 2 == 1;
  Output o(rc.out_path, out);
  auto& os = o.get();
  if (rc.format == "csv") {
    os << "j,re,im,abs,exponent\n" << std::setprecision(17);
    for (int j = 0; j < rc.m; ++j) {
      const Complex a = state.amplitudes[j];
      os << j << ',' << a.real() << ',' << a.imag() << ',' << std::abs(a) << ',';
      if (odd) os << state_exponent_twice(rc.k, rc.m, rc.N, j) / 2;
      os << '\n';
    }
    return kOk;
  }
  json rows = json::array();
  for (int j = 0; j < rc.m; ++j) {
    const Complex a = state.amplitudes[j];
    json row = {{"j", j}, {"re", a.real()}, {"im", a.imag()}, {"abs", std::abs(a)}};
    row["exponent"] = odd ? json(state_exponent_twice(rc.k, rc.m, rc.N, j) / 2) : json(nullptr);
    rows.push_back(row);
  }
  os << json{{"m", rc.m}, {"N", rc.N}, {"k", rc.k}, {"rows", rows}}.dump(2) << '\n';
  return kOk;
}

int cmd_sweep(const RunConfig& rc, std::ostream& out) {
  validate_system(rc);
  const auto grid = collect_parameters(rc, {});
  if (grid.empty()) throw ConfigError("sweep needs --a-range or --a");
  const ModulusConfig cfg(rc.m);
  const ParamOperatorFamily fam(build_site_system(cfg, rc.N, rc.z, rc.n));
  if (rc.generator < 1 || rc.generator > fam.generator_count()) throw ConfigError("generator index outside [1, n-1]");
  const StateVector phi0 = StateVector::repeated(rc.m, fam.system().total_arity(), rc.k);
  const Trajectory t = evolve(fam, rc.generator, phi0, grid);
  Output o(rc.out_path, out);
  auto& os = o.get();
  if (rc.format == "json") {
    json rows = json::array();
    for (std::size_t g = 0; g < t.states.size(); ++g) {
      const auto& v = t.states[g].amps;
      for (Eigen::Index idx = 0; idx < v.size(); ++idx) {
        if (std::abs(v(idx)) <= 1e-12) continue;
        rows.push_back({{"a", parameter_to_json(t.a_grid[g])}, {"basis_index", idx}, {"re", v(idx).real()}, {"im", v(idx).imag()}});
      }
    }
    os << json{{"m", rc.m}, {"N", rc.N}, {"z", rc.z}, {"n", rc.n}, {"k", rc.k}, {"rows", rows}}.dump(2) << '\n';
  } else {
    write_trajectory_csv(os, t);
  }
  return kOk;
}

}  // namespace

double parse_parameter(const std::string& text) {
  std::string t = text;
  if (t == "inf" || t == "+inf") return std::numeric_limits<double>::infinity();
  if (t == "-inf") return -std::numeric_limits<double>::infinity();
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(t, &used);
  } catch (const std::exception&) {
    throw ConfigError("cannot parse parameter '" + text + "'");
  }
  if (used != t.size() || std::isnan(v)) throw ConfigError("cannot parse parameter '" + text + "'");
  return v;
}

std::vector<double> parse_a_range(const std::string& spec) {
  const auto first = spec.find(':');
  const auto second = first == std::string::npos ? std::string::npos : spec.find(':', first + 1);
  if (second == std::string::npos || spec.find(':', second + 1) != std::string::npos) {
    throw ConfigError("a-range must have the form start:stop:steps, got '" + spec + "'");
  }
  const double start = parse_parameter(spec.substr(0, first));
  const double stop = parse_parameter(spec.substr(first + 1, second - first - 1));
  const std::string steps_text = spec.substr(second + 1);
  int steps = 0;
  try {
    std::size_t used = 0;
    steps = std::stoi(steps_text, &used);
    if (used != steps_text.size()) steps = 0;
  } catch (const std::exception&) {
    steps = 0;
  }
  if (steps < 1) throw ConfigError("a-range steps must be a positive integer, got '" + steps_text + "'");
  if (!std::isfinite(start) || !std::isfinite(stop)) throw ConfigError("a-range endpoints must be finite");
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(steps));
  if (steps == 1) return {start};
  for (int s = 0; s < steps; ++s) {
    grid.push_back(s == steps - 1 ? stop : start + (stop - start) * s / (steps - 1));
  }
  return grid;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gaussian (z,N)-generalized Yang-Baxter operators: coefficients, verification, states"};
  app.require_subcommand(1);
  RunConfig rc;

  auto add_levels = [&rc](CLI::App* sub) {
    sub->add_option("--m", rc.m, "number of levels per qudit")->required();
    sub->add_option("--format", rc.format, "output format")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", rc.out_path, "write output to this file instead of stdout");
  };
  auto add_system = [&rc](CLI::App* sub) {
    sub->add_option("--N", rc.N, "tensor factors per site operator");
    sub->add_option("--z", rc.z, "shift between adjacent generators");
    sub->add_option("--n", rc.n, "n - 1 generators T_1 .. T_{n-1}");
  };
  auto add_parameters = [&rc](CLI::App* sub) {
    sub->add_option("--a", rc.a_values, "spectral parameter values (inf and -inf accepted)");
    sub->add_option("--a-range", rc.a_range, "inclusive grid start:stop:steps");
  };

  CLI::App* coeffs = app.add_subcommand("coeffs", "normalized coefficients X~_j(a)");
  add_levels(coeffs);
  add_parameters(coeffs);

  CLI::App* verify = app.add_subcommand("verify", "run the residual suite; exit 0 iff every residual is within tolerance");
  add_levels(verify);
  add_system(verify);
  verify->add_option("--seed", rc.seed, "random seed for sampled parameters");
  verify->add_option("--samples", rc.samples, "random parameter samples per relation");
  verify->add_option("--tolerance", rc.tolerance, "relative Frobenius tolerance");

  CLI::App* states = app.add_subcommand("states", "amplitudes of S|k>^N on the diagonal states |j>^N");
  add_levels(states);
  states->add_option("--N", rc.N, "number of qudits");
  states->add_option("--k", rc.k, "basis index of the product state");

  CLI::App* sweep = app.add_subcommand("sweep", "evolve |k>^{(x)arity} under R~_i(a) along a grid of a");
  add_levels(sweep);
  add_system(sweep);
  add_parameters(sweep);
  sweep->add_option("--k", rc.k, "basis index of the initial product state");
  sweep->add_option("--i", rc.generator, "generator index");
  sweep->add_option("--seed", rc.seed, "unused; accepted for uniform invocation");
  sweep->add_option("--tolerance", rc.tolerance, "unused; accepted for uniform invocation");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kConfigError;
  }

  try {
    if (coeffs->parsed()) return cmd_coeffs(rc, out);
    if (states->parsed()) return cmd_states(rc, out);
    if (verify->parsed()) return cmd_verify(rc, out);
    if (sweep->parsed()) {
      if (sweep->count("--format") == 0) rc.format = "csv";
      if (sweep->count("--n") == 0) rc.n = 2;
      return cmd_sweep(rc, out);
    }
  } catch (const ConfigError& e) {
    err << "configuration error: " << e.what() << '\n';
    return kConfigError;
  } catch (const WindowViolation& e) {
    err << "configuration error: " << e.what() << '\n';
    return kConfigError;
  } catch (const DimensionCapExceeded& e) {
    err << "configuration error: " << e.what() << " (raise GYBE_DIM_CAP to allow larger systems)\n";
    return kConfigError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kResidualFailure;
  }
  return kConfigError;
}

}  // namespace gybe::cli
