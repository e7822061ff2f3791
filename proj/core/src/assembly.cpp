#include "nps7/assembly.hpp"

#include "nps7/error.hpp"

#include <cmath>
#include <string>

namespace nps7 {

namespace {

constexpr std::array<int, 8> kDifferenceWeights = {-1, 7, -21, 35, -35, 21, -7, 1};
constexpr int kDifferenceScale = 120;

template <typename Real>
struct RealCoeff {
  int index;
  Real value;
};

template <typename Real>
struct RealRow {
  std::vector<RealCoeff<Real>> u, y, d;
};

template <typename Real>
std::vector<RealCoeff<Real>> to_real(const std::vector<RationalCoeff>& coeffs) {
  std::vector<RealCoeff<Real>> out;
  out.reserve(coeffs.size());
  for (const auto& c : coeffs) out.push_back({c.index, c.value.template to<Real>()});
  return out;
}

template <typename Real>
std::vector<RealRow<Real>> convert_rows(EndConditionMode mode) {
  std::vector<RealRow<Real>> out;
  for (const auto& row : end_rows(mode)) {
    out.push_back({to_real<Real>(row.u), to_real<Real>(row.y), to_real<Real>(row.d)});
  }
  return out;
}

// The exact tables are converted once per scalar type and mode.
template <typename Real>
const std::vector<RealRow<Real>>& real_rows(EndConditionMode mode) {
  static const std::vector<RealRow<Real>> standard = convert_rows<Real>(EndConditionMode::Standard);
  static const std::vector<RealRow<Real>> improved = convert_rows<Real>(EndConditionMode::Improved);
  return mode == EndConditionMode::Standard ? standard : improved;
}

// Accumulates one row of the system. Unknown y_j (j >= 1) sits in column j-1;
// everything attached to knot 0 is known and goes to the right-hand side.
template <typename Real>
class RowWriter {
 public:
  RowWriter(BasicLinearSystem<Real>& system, const std::vector<Real>& f,
            const std::vector<Real>& g, Real inv_h7)
      : system_(system), f_(f), g_(g), inv_h7_(inv_h7) {}

  // coeff * U_j with U_j = g_j - f_j y_j.
  void add_u(int row, int j, Real coeff) {
    const auto jj = static_cast<std::size_t>(j);
    if (j == 0) {
      system_.rhs(row) -= coeff * (g_[0] - f_[0] * static_cast<Real>(system_.y0));
      return;
    }
    system_.matrix(row, j - 1) -= coeff * f_[jj];
    system_.rhs(row) -= coeff * g_[jj];
  }

  // -(coeff / h^7) y_j moved to the left.
  void add_y(int row, int j, Real coeff) {
    if (j == 0) {
      system_.rhs(row) += coeff * inv_h7_ * static_cast<Real>(system_.y0);
      return;
    }
    system_.matrix(row, j - 1) -= coeff * inv_h7_;
  }

  // (coeff / h^7) h^m y0^(m), already known.
  void add_known(int row, Real value) { system_.rhs(row) += value * inv_h7_; }

 private:
  BasicLinearSystem<Real>& system_;
  const std::vector<Real>& f_;
  const std::vector<Real>& g_;
  Real inv_h7_;
};

long double ipow(long double x, int m) {
  long double out = 1;
  for (int i = 0; i < m; ++i) out *= x;
  return out;
}

struct ExactSampler {
  ForceExpr y;
  ForceExpr y7;
  ForceExpr y_init_derivs[8];

  explicit ExactSampler(const ForceExpr& exact) : y(exact), y7(derivative(exact, 7)) {
    for (int m = 0; m < 8; ++m) y_init_derivs[m] = derivative(exact, m);
  }
};

}  // namespace

template <typename Real>
BasicLinearSystem<Real> build_system(const IvpProblem& problem, const SplineParams& params,
                                     EndConditionMode mode, int n, const BuildOptions& options) {
  problem.validate();
  validate(params);
  const int min_n = min_intervals(mode);
  if (n < min_n) {
    throw ValidationError(std::string(to_string(mode)) + " end conditions need n >= " +
                          std::to_string(min_n) + ", got n = " + std::to_string(n));
  }

  BasicLinearSystem<Real> system;
  system.a = problem.a;
  system.h = (problem.b - problem.a) / n;
  system.n = n;
  system.y0 = problem.u[0];
  system.mode = mode;
  system.params = params;
  system.matrix = BasicLinearSystem<Real>::Matrix::Zero(n, n);
  system.rhs = BasicLinearSystem<Real>::Vector::Zero(n);

  const Real a = problem.a;
  const Real h = (static_cast<Real>(problem.b) - a) / static_cast<Real>(n);
  std::vector<Real> f(static_cast<std::size_t>(n) + 1);
  std::vector<Real> g(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    const Real t = a + static_cast<Real>(i) * h;
    f[static_cast<std::size_t>(i)] = problem.f.eval(t);
    g[static_cast<std::size_t>(i)] = problem.g.eval(t);
  }
  Real h7 = 1;
  for (int k = 0; k < 7; ++k) h7 *= h;
  RowWriter<Real> writer(system, f, g, Real(1) / h7);

  // h^m y0^(m) for m = 0..7; y0^(7) comes from the equation at t = a.
  std::array<Real, 8> scaled_init{};
  Real hm = 1;
  for (int m = 0; m < 8; ++m) {
    const Real derivative_value =
        m < 7 ? static_cast<Real>(problem.u[static_cast<std::size_t>(m)])
              : g[0] - f[0] * static_cast<Real>(problem.u[0]);
    scaled_init[static_cast<std::size_t>(m)] = hm * derivative_value;
    hm *= h;
  }

  const auto& rows = real_rows<Real>(mode);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const int row = static_cast<int>(r);
    for (const auto& c : rows[r].u) writer.add_u(row, c.index, c.value);
    for (const auto& c : rows[r].y) writer.add_y(row, c.index, c.value);
    for (const auto& c : rows[r].d) {
      writer.add_known(row, c.value * scaled_init[static_cast<std::size_t>(c.index)]);
    }
  }

  const auto weights = params.template stencil<Real>();
  for (int i = 7; i <= n; ++i) {
    const int row = i - 1;
    for (int k = 0; k < 8; ++k) {
      const int j = i - 7 + k;
      writer.add_u(row, j, weights[static_cast<std::size_t>(k)]);
      writer.add_y(row, j,
                   static_cast<Real>(kDifferenceScale * kDifferenceWeights[static_cast<std::size_t>(k)]));
    }
  }

  if (options.normalize_rows) {
    for (int row = 0; row < n; ++row) {
      const Real scale = system.matrix.row(row).cwiseAbs().maxCoeff();
      if (scale > 0) {
        system.matrix.row(row) /= scale;
        system.rhs(row) /= scale;
      }
    }
  }
  return system;
}

RowResidual end_row_residual(const EndRow& row, const ForceExpr& exact, double a, double h) {
  const ExactSampler sample(exact);
  const long double hl = h;
  const long double inv_h7 = 1.0L / ipow(hl, 7);
  RowResidual out;
  auto add = [&out](long double term) {
    out.value += term;
    out.scale += std::abs(term);
  };
  for (const auto& c : row.u) {
    const long double t = static_cast<long double>(a) + c.index * hl;
    add(c.value.to<long double>() * sample.y7.eval(t));
  }
  for (const auto& c : row.y) {
    const long double t = static_cast<long double>(a) + c.index * hl;
    add(-c.value.to<long double>() * inv_h7 * sample.y.eval(t));
  }
  for (const auto& c : row.d) {
    const long double dm = sample.y_init_derivs[c.index].eval(static_cast<long double>(a));
    add(-c.value.to<long double>() * inv_h7 * ipow(hl, c.index) * dm);
  }
  return out;
}

RowResidual row_residual(EndConditionMode mode, const SplineParams& params,
                         const ForceExpr& exact, double a, double b, int n, int row) {
  if (row < 1 || row > n) {
    throw ValidationError("row index must lie in 1..n, got " + std::to_string(row));
  }
  if (n < min_intervals(mode)) {
    throw ValidationError("n too small for " + std::string(to_string(mode)) + " end conditions");
  }
  const double h = (b - a) / n;
  if (row <= 6) return end_row_residual(end_rows(mode)[static_cast<std::size_t>(row - 1)], exact, a, h);

  const ExactSampler sample(exact);
  const auto weights = params.stencil<long double>();
  const long double hl = static_cast<long double>(b - a) / n;
  const long double inv_h7 = 1.0L / ipow(hl, 7);
  RowResidual out;
  for (int k = 0; k < 8; ++k) {
    const long double t = static_cast<long double>(a) + (row - 7 + k) * hl;
    const long double u_term = weights[static_cast<std::size_t>(k)] * sample.y7.eval(t);
    const long double y_term = -static_cast<long double>(
                                   kDifferenceScale * kDifferenceWeights[static_cast<std::size_t>(k)]) *
                               inv_h7 * sample.y.eval(t);
    out.value += u_term + y_term;
    out.scale += std::abs(u_term) + std::abs(y_term);
  }
  return out;
}

template BasicLinearSystem<double> build_system<double>(const IvpProblem&, const SplineParams&,
                                                        EndConditionMode, int, const BuildOptions&);
template BasicLinearSystem<long double> build_system<long double>(const IvpProblem&,
                                                                  const SplineParams&,
                                                                  EndConditionMode, int,
                                                                  const BuildOptions&);

}  // namespace nps7
