#include "nps7/cascade.hpp"

#include "nps7/error.hpp"

#include <cmath>
#include <string>

namespace nps7 {

namespace {

int wrap(int index, int modulus) { return ((index % modulus) + modulus) % modulus; }

}  // namespace

void CascadeModel::validate() const {
  if (scales < 1) throw ValidationError("cascade needs at least one scale");
  if (static_cast<int>(forces.size()) != scales) {
    throw ValidationError("expected " + std::to_string(scales) + " forces, got " +
                          std::to_string(forces.size()));
  }
  if (static_cast<int>(init_velocities.size()) != scales) {
    throw ValidationError("expected " + std::to_string(scales) + " initial velocities, got " +
                          std::to_string(init_velocities.size()));
  }
  if (!(gamma > 0.0) || !std::isfinite(gamma)) throw ValidationError("gamma must be positive");
  if (!(a < b)) throw ValidationError("cascade interval must satisfy a < b");
}

const ForceExpr& CascadeModel::force(int scale) const {
  return forces[static_cast<std::size_t>(wrap(scale - 1, scales))];
}

CascadeModel CascadeModel::shifted(int shift) const {
  CascadeModel out = *this;
  for (int k = 0; k < scales; ++k) {
    const auto src = static_cast<std::size_t>(wrap(k + shift, scales));
    out.forces[static_cast<std::size_t>(k)] = forces[src];
    out.init_velocities[static_cast<std::size_t>(k)] = init_velocities[src];
  }
  return out;
}

ForceExpr compose_g(const CascadeModel& model) {
  model.validate();
  const int n = model.scales;
  ForceExpr g;
  for (int j = 0; j < n; ++j) {
    const double weight = std::pow(-model.gamma, n - 1 - j);
    g = g + derivative(model.force(n - j), j).scaled(weight);
  }
  return g;
}

std::vector<double> derive_initial_conditions(const CascadeModel& model) {
  model.validate();
  const int n = model.scales;
  std::vector<double> u(static_cast<std::size_t>(n));
  for (int m = 0; m < n; ++m) {
    double value =
        std::pow(-model.gamma, m) * model.init_velocities[static_cast<std::size_t>(wrap(m, n))];
    for (int j = 0; j < m; ++j) {
      value += std::pow(-model.gamma, m - 1 - j) * derivative(model.force(m - j), j).eval(model.a);
    }
    u[static_cast<std::size_t>(m)] = value;
  }
  return u;
}

HighOrderIvp reduce_general(const CascadeModel& model) {
  model.validate();
  if (model.scales % 2 == 0) {
    throw UnsupportedError("cascade reduction is implemented for odd N only, got N = " +
                           std::to_string(model.scales));
  }
  HighOrderIvp out;
  out.order = model.scales;
  out.a = model.a;
  out.b = model.b;
  out.f = ForceExpr::constant(std::pow(model.gamma, model.scales));
  out.g = compose_g(model);
  out.u = derive_initial_conditions(model);
  return out;
}

IvpProblem reduce(const CascadeModel& model) {
  if (model.scales != 7) {
    if (model.scales % 2 == 0) reduce_general(model);  // throws the even-N error
    throw UnsupportedError("the spline solver handles N = 7 only, got N = " +
                           std::to_string(model.scales) +
                           "; use reduce_general with the Runge-Kutta oracle");
  }
  const HighOrderIvp general = reduce_general(model);
  IvpProblem out;
  out.a = general.a;
  out.b = general.b;
  out.f = general.f;
  out.g = general.g;
  for (std::size_t m = 0; m < out.u.size(); ++m) out.u[m] = general.u[m];
  return out;
}

CascadeTrajectory simulate_direct(const CascadeModel& model, int steps) {
  model.validate();
  if (steps < 1) throw ValidationError("steps must be positive");
  const int n = model.scales;
  const double h = (model.b - model.a) / steps;
  const auto size = static_cast<std::size_t>(n);

  auto rhs = [&](double t, const std::vector<double>& y, std::vector<double>& dy) {
    for (int k = 0; k < n; ++k) {
      dy[static_cast<std::size_t>(k)] =
          -model.gamma * y[static_cast<std::size_t>(wrap(k + 1, n))] +
          model.forces[static_cast<std::size_t>(k)](t);
    }
  };

  CascadeTrajectory out;
  out.t.resize(static_cast<std::size_t>(steps) + 1);
  out.scales.assign(size, std::vector<double>(static_cast<std::size_t>(steps) + 1));

  std::vector<double> y = model.init_velocities;
  std::vector<double> k1(size), k2(size), k3(size), k4(size), tmp(size);
  for (int s = 0; s <= steps; ++s) {
    const double t = model.a + s * h;
    out.t[static_cast<std::size_t>(s)] = t;
    for (std::size_t k = 0; k < size; ++k) out.scales[k][static_cast<std::size_t>(s)] = y[k];
    if (s == steps) break;
    rhs(t, y, k1);
    for (std::size_t k = 0; k < size; ++k) tmp[k] = y[k] + 0.5 * h * k1[k];
    rhs(t + 0.5 * h, tmp, k2);
    for (std::size_t k = 0; k < size; ++k) tmp[k] = y[k] + 0.5 * h * k2[k];
    rhs(t + 0.5 * h, tmp, k3);
    for (std::size_t k = 0; k < size; ++k) tmp[k] = y[k] + h * k3[k];
    rhs(t + h, tmp, k4);
    for (std::size_t k = 0; k < size; ++k) {
      y[k] += h / 6.0 * (k1[k] + 2.0 * k2[k] + 2.0 * k3[k] + k4[k]);
    }
  }
  return out;
}

}  // namespace nps7
