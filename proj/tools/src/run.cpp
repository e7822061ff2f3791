#include "nps7_cli/run.hpp"

#include "nps7/error.hpp"
#include "nps7/oracle.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace nps7::cli {

namespace {

std::string format17(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream file(path, std::ios::binary);
  if (!file) throw ValidationError("cannot write '" + path.string() + "'");
  file << content;
  if (!file) throw ValidationError("failed writing '" + path.string() + "'");
}

void print_params(const SplineParams& p, std::ostream& out) {
  out << "alpha = " << p.alpha.str() << " (" << format17(p.alpha.to_double()) << ")\n"
      << "beta  = " << p.beta.str() << " (" << format17(p.beta.to_double()) << ")\n"
      << "gamma = " << p.gamma.str() << " (" << format17(p.gamma.to_double()) << ")\n"
      << "delta = " << p.delta.str() << " (" << format17(p.delta.to_double()) << ")\n";
}

SolutionGrid solve_one(const IvpProblem& problem, const MethodSpec& method, std::ostream& out) {
  const SplineParams params = resolve(method.params);
  validate(params);
  const int n = method.n_list.front();
  BuildOptions options;
  options.normalize_rows = method.normalize_rows;
  const SolutionGrid grid = solve_spline(problem, params, method.mode, n, method.precision, options);
  out << "mode " << to_string(method.mode) << ", n = " << n << ", h = " << format17(grid.h)
      << ", precision " << to_string(method.precision) << "\n";
  out << "relative backward residual " << grid.relative_residual << "\n";
  const double cond = method.precision == Precision::Double
                          ? condition_estimate(build_system<double>(problem, params, method.mode, n, options))
                          : condition_estimate(build_system<long double>(problem, params, method.mode, n, options));
  out << "condition estimate (inf-norm) " << cond << "\n";
  return grid;
}

void report_error(const SolutionGrid& grid, const std::vector<double>& reference, std::ostream& out) {
  double worst = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) worst = std::max(worst, std::abs(grid.y[i] - reference[i]));
  out << "max abs error " << format17(worst) << "\n";
}

void run_solve(const RunConfig& config, std::ostream& out) {
  const ProblemSpec& spec = *config.problem;
  const SolutionGrid grid = solve_one(spec.problem, config.method, out);
  std::vector<double> reference;
  if (spec.exact) {
    for (double t : grid.t) reference.push_back((*spec.exact)(t));
    report_error(grid, reference, out);
  }
  write_file(config.csv_path, solution_csv(grid, spec.exact ? &reference : nullptr));
  out << "wrote " << config.csv_path.string() << "\n";
}

void run_cascade(const RunConfig& config, std::ostream& out) {
  const CascadeSpec& spec = *config.cascade;
  const IvpProblem problem = reduce(spec.model);
  out << "g(t) = " << problem.g.str() << "\n";
  out << "f(t) = " << problem.f.str() << "\n";
  out << "u =";
  for (double v : problem.u) out << " " << format17(v);
  out << "\n";
  write_file(config.g_path, problem.g.str() + "\n");

  const SolutionGrid grid = solve_one(problem, config.method, out);
  std::vector<double> reference;
  if (spec.direct_reference) {
    const int n = config.method.n_list.front();
    if (spec.direct_steps % n != 0) {
      throw ValidationError("direct_steps must be a multiple of n");
    }
    const CascadeTrajectory direct = simulate_direct(spec.model, spec.direct_steps);
    const int stride = spec.direct_steps / n;
    for (int i = 0; i <= n; ++i) reference.push_back(direct.top()[static_cast<std::size_t>(i * stride)]);
    report_error(grid, reference, out);
  }
  write_file(config.csv_path, solution_csv(grid, spec.direct_reference ? &reference : nullptr));
  out << "wrote " << config.csv_path.string() << " and " << config.g_path.string() << "\n";
}

void run_converge(const RunConfig& config, std::ostream& out) {
  const ProblemSpec& spec = *config.problem;
  const SplineParams params = resolve(config.method.params);
  validate(params);
  const ConvergenceReport report = convergence_study(spec.problem, params, config.method.mode,
                                                     config.method.n_list, spec.exact,
                                                     config.method.precision);
  out << "mode " << to_string(report.mode) << ", reference "
      << (spec.exact ? "analytic" : "runge-kutta") << ", precision "
      << to_string(config.method.precision) << "\n";
  std::ostringstream csv;
  csv << "n,max_abs_error,observed_order\n";
  out << std::setw(8) << "n" << std::setw(16) << "max abs error" << std::setw(10) << "order" << "\n";
  for (std::size_t k = 0; k < report.entries.size(); ++k) {
    const auto& entry = report.entries[k];
    const std::optional<double> order = k > 0 ? report.orders[k - 1] : std::nullopt;
    csv << entry.n << "," << format17(entry.max_abs_error) << ",";
    if (order) csv << format17(*order);
    csv << "\n";
    std::ostringstream order_text;
    if (order) order_text << std::fixed << std::setprecision(2) << *order;
    out << std::setw(8) << entry.n << std::setw(16) << std::setprecision(3) << std::scientific
        << entry.max_abs_error << std::defaultfloat << std::setw(10) << order_text.str() << "\n";
  }
  write_file(config.csv_path, csv.str());
  out << "wrote " << config.csv_path.string() << "\n";
}

ParamChoice parse_params_option(const std::string& text) {
  std::vector<ExactRational> values;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) values.push_back(ExactRational::parse(item));
  if (values.size() != 4) throw ValidationError("--params expects four comma-separated values");
  return ExplicitParams{{values[0], values[1], values[2], values[3]}};
}

}  // namespace

std::string solution_csv(const SolutionGrid& grid, const std::vector<double>* reference) {
  std::string csv = "t,y_numeric,y_exact,abs_error\n";
  for (std::size_t i = 0; i < grid.size(); ++i) {
    csv += format17(grid.t[i]) + "," + format17(grid.y[i]) + ",";
    if (reference != nullptr) {
      const double exact = (*reference)[i];
      csv += format17(exact) + "," + format17(std::abs(grid.y[i] - exact));
    } else {
      csv += ",";
    }
    csv += "\n";
  }
  return csv;
}

void run(const RunConfig& config, std::ostream& out) {
  switch (config.subcommand) {
    case Subcommand::Solve:
      run_solve(config, out);
      break;
    case Subcommand::Cascade:
      run_cascade(config, out);
      break;
    case Subcommand::Converge:
      run_converge(config, out);
      break;
  }
}

void run_coeffs(const ParamChoice& choice, std::ostream& out) {
  const SplineParams params = resolve(choice);
  print_params(params, out);
  const ExactRational sum = params.sum();
  out << "sum   = " << sum.str() << " (" << format17(sum.to_double()) << ")";
  if (abs(sum - 60).to_double() > kParamSumTolerance) out << "  [violates alpha+beta+gamma+delta = 60]";
  out << "\n";
  const TruncationCoeffs c = truncation_coeffs(params);
  const auto values = c.as_array();
  for (std::size_t k = 0; k < values.size(); ++k) {
    out << "c" << (7 + k) << " = " << values[k].str() << " (" << format17(values[k].to_double())
        << ")\n";
  }
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Seventh-order IVP solver using non-polynomial splines", "nps7"};
  app.require_subcommand(1);

  std::string config_path;
  auto* solve = app.add_subcommand("solve", "Solve one IVP and write knot values as CSV");
  solve->add_option("--config", config_path, "config file")->required();
  auto* cascade = app.add_subcommand("cascade", "Reduce a cascade model to an IVP and solve it");
  cascade->add_option("--config", config_path, "config file")->required();
  auto* converge = app.add_subcommand("converge", "Error and observed order over a list of n");
  converge->add_option("--config", config_path, "config file")->required();

  auto* coeffs = app.add_subcommand("coeffs", "Print spline parameters and truncation coefficients");
  std::string delta_text;
  std::string params_text;
  double theta = 0.0;
  auto* delta_opt = coeffs->add_option("--delta", delta_text, "member of the optimal family");
  auto* theta_opt = coeffs->add_option("--theta", theta, "closed forms in theta");
  auto* params_opt = coeffs->add_option("--params", params_text, "alpha,beta,gamma,delta");
  delta_opt->excludes(theta_opt)->excludes(params_opt);
  theta_opt->excludes(params_opt);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (coeffs->parsed()) {
      const int given = int(delta_opt->count() > 0) + int(theta_opt->count() > 0) +
                        int(params_opt->count() > 0);
      if (given != 1) throw ValidationError("coeffs needs exactly one of --delta, --theta, --params");
      if (delta_opt->count() > 0) {
        run_coeffs(OptimalDelta{ExactRational::parse(delta_text)}, out);
      } else if (theta_opt->count() > 0) {
        run_coeffs(ThetaChoice{theta}, out);
      } else {
        run_coeffs(parse_params_option(params_text), out);
      }
      return kExitOk;
    }
    const Subcommand subcommand = solve->parsed()     ? Subcommand::Solve
                                  : cascade->parsed() ? Subcommand::Cascade
                                                      : Subcommand::Converge;
    run(load_config(config_path, subcommand), out);
    return kExitOk;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  }
}

}  // namespace nps7::cli
