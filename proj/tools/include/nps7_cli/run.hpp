#pragma once

#include "nps7_cli/config.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace nps7::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 1;
inline constexpr int kExitNumerical = 2;

/// Runs a solve / cascade / converge config. Errors propagate as exceptions.
void run(const RunConfig& config, std::ostream& out);

/// Prints (alpha, beta, gamma, delta) and c7..c12 for one parameterization.
void run_coeffs(const ParamChoice& choice, std::ostream& out);

/// Full command-line entry point; maps exceptions to exit codes 1 and 2.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// CSV text with header t,y_numeric,y_exact,abs_error and 17 significant digits.
std::string solution_csv(const SolutionGrid& grid, const std::vector<double>* reference);

}  // namespace nps7::cli
