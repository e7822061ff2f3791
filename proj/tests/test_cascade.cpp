#include "doctest.h"

#include "nps7/cascade.hpp"
#include "nps7/error.hpp"
#include "nps7/oracle.hpp"

#include <cmath>
#include <random>

using namespace nps7;

namespace {

CascadeModel zero_model(int scales, double gamma) {
  CascadeModel m;
  m.scales = scales;
  m.gamma = gamma;
  m.forces.assign(static_cast<std::size_t>(scales), ForceExpr());
  m.init_velocities.assign(static_cast<std::size_t>(scales), 0.0);
  return m;
}

ForceExpr random_force(std::mt19937& rng) {
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  std::uniform_int_distribution<int> power(0, 3);
  std::vector<ForceTerm> terms;
  terms.push_back({coeff(rng), power(rng)});
  terms.push_back({coeff(rng), power(rng)});
  ForceTerm trig{coeff(rng), 0};
  trig.trig = rng() % 2 ? Trig::Sin : Trig::Cos;
  trig.trig_freq = 1.0 + 2.0 * (coeff(rng) + 1.0);
  terms.push_back(trig);
  return ForceExpr(terms);
}

CascadeModel random_model(std::mt19937& rng, int scales, double gamma) {
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  CascadeModel m = zero_model(scales, gamma);
  for (int k = 0; k < scales; ++k) {
    m.forces[static_cast<std::size_t>(k)] = random_force(rng);
    m.init_velocities[static_cast<std::size_t>(k)] = coeff(rng);
  }
  return m;
}

// Manufactured solution: pick every scale trajectory y_k, then L_k = y_k' + gamma y_{k+1}.
struct Manufactured {
  CascadeModel model;
  std::vector<ForceExpr> trajectories;
};

Manufactured manufactured(int scales, double gamma) {
  Manufactured out{zero_model(scales, gamma), {}};
  for (int k = 0; k < scales; ++k) {
    std::vector<ForceTerm> terms{{0.3 * (k + 1), k % 4}, {1.0, 0}};
    ForceTerm s{0.5, 1};
    s.trig = Trig::Sin;
    s.trig_freq = 1.0 + 0.25 * k;
    s.trig_phase = 0.1 * k;
    terms.push_back(s);
    ForceTerm e{-0.2, 0, 0.5 - 0.1 * k};
    terms.push_back(e);
    out.trajectories.emplace_back(terms);
  }
  for (int k = 0; k < scales; ++k) {
    const auto& next = out.trajectories[static_cast<std::size_t>((k + 1) % scales)];
    out.model.forces[static_cast<std::size_t>(k)] =
        derivative(out.trajectories[static_cast<std::size_t>(k)], 1) + next.scaled(gamma);
    out.model.init_velocities[static_cast<std::size_t>(k)] =
        out.trajectories[static_cast<std::size_t>(k)](out.model.a);
  }
  return out;
}

}  // namespace

TEST_CASE("model validation") {
  CascadeModel m = zero_model(7, 1.0);
  CHECK_NOTHROW(m.validate());
  m.gamma = 0.0;
  CHECK_THROWS_AS(m.validate(), ValidationError);
  m = zero_model(7, 1.0);
  m.forces.pop_back();
  CHECK_THROWS_AS(m.validate(), ValidationError);
  m = zero_model(7, 1.0);
  m.b = m.a;
  CHECK_THROWS_AS(m.validate(), ValidationError);
}

TEST_CASE("compose_g examples") {
  CHECK(compose_g(zero_model(7, 1.0)).is_zero());

  CascadeModel top = zero_model(7, 1.0);
  top.forces[6] = ForceExpr::constant(2.5);
  CHECK(compose_g(top) == ForceExpr::constant(2.5));

  CascadeModel first = zero_model(7, 1.0);
  first.forces[0] = ForceExpr::monomial(1.0, 6);
  CHECK(compose_g(first) == ForceExpr::constant(720));

  // N = 3: g = gamma^2 L3 - gamma L2' + L1''.
  CascadeModel three = zero_model(3, 2.0);
  three.forces[0] = ForceExpr::monomial(1.0, 3);
  three.forces[1] = ForceExpr::monomial(1.0, 2);
  three.forces[2] = ForceExpr::constant(1.0);
  const ForceExpr g = compose_g(three);
  for (double t : {-1.0, 0.0, 0.7, 2.0}) CHECK(g(t) == doctest::Approx(4.0 - 2.0 * 2 * t + 6 * t));
}

TEST_CASE("initial condition examples") {
  CascadeModel ones = zero_model(7, 1.0);
  ones.init_velocities.assign(7, 1.0);
  const auto u = derive_initial_conditions(ones);
  REQUIRE(u.size() == 7);
  for (int m = 0; m < 7; ++m) CHECK(u[static_cast<std::size_t>(m)] == (m % 2 ? -1.0 : 1.0));

  CascadeModel free = zero_model(7, 1.7);
  free.init_velocities = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7};
  CHECK(derive_initial_conditions(free)[1] == doctest::Approx(-1.7 * 0.2));

  std::mt19937 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    CascadeModel m = random_model(rng, 7, 1.0);
    m.a = 0.3;
    const double expected = m.init_velocities[2] - m.forces[1](m.a) + derivative(m.forces[0], 1)(m.a);
    CHECK(derive_initial_conditions(m)[2] == doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("reduction: manufactured trajectories satisfy the reduced equation") {
  for (double gamma : {0.5, 1.0, 2.0}) {
    for (int scales : {3, 5, 7}) {
      const Manufactured mf = manufactured(scales, gamma);
      const HighOrderIvp ivp = reduce_general(mf.model);
      const ForceExpr& y = mf.trajectories[0];
      CHECK(ivp.order == scales);
      CHECK(ivp.f == ForceExpr::constant(std::pow(gamma, scales)));
      for (int m = 0; m < scales; ++m) {
        CHECK(ivp.u[static_cast<std::size_t>(m)] ==
              doctest::Approx(derivative(y, m)(mf.model.a)).epsilon(1e-12));
      }
      const ForceExpr lhs = derivative(y, scales) + y.scaled(std::pow(gamma, scales));
      for (double t : {0.0, 0.25, 0.5, 1.0}) CHECK(ivp.g(t) == doctest::Approx(lhs(t)).epsilon(1e-11));
    }
  }
}

TEST_CASE("reduce errors and trivial cases") {
  CHECK_THROWS_AS(reduce(zero_model(6, 1.0)), UnsupportedError);
  CHECK_THROWS_AS(reduce_general(zero_model(4, 1.0)), UnsupportedError);
  CHECK_THROWS_AS(reduce(zero_model(5, 1.0)), UnsupportedError);
  CHECK_NOTHROW(reduce_general(zero_model(5, 1.0)));

  const IvpProblem trivial = reduce(zero_model(7, 1.0));
  CHECK(trivial.f == ForceExpr::constant(1.0));
  CHECK(trivial.g.is_zero());
  for (double v : trivial.u) CHECK(v == 0.0);
  CHECK(reduce(zero_model(7, 2.0)).f == ForceExpr::constant(128.0));
}

TEST_CASE("direct simulation: trivial and symmetric models") {
  const auto zero = simulate_direct(zero_model(7, 1.0), 100);
  CHECK(zero.t.size() == 101);
  for (const auto& scale : zero.scales) {
    for (double v : scale) CHECK(v == 0.0);
  }

  CascadeModel sym = zero_model(7, 1.0);
  sym.a = 0.5;
  sym.b = 1.5;
  sym.init_velocities.assign(7, 1.0);
  const auto traj = simulate_direct(sym, 10000);
  double worst = 0.0;
  for (std::size_t k = 0; k < 7; ++k) {
    for (std::size_t i = 0; i < traj.t.size(); ++i) {
      worst = std::max(worst, std::abs(traj.scales[k][i] - std::exp(-(traj.t[i] - sym.a))));
    }
  }
  CHECK(worst < 1e-8);
}

TEST_CASE("direct simulation follows manufactured trajectories") {
  const Manufactured mf = manufactured(7, 1.0);
  const auto traj = simulate_direct(mf.model, 2000);
  for (std::size_t k = 0; k < 7; ++k) {
    double worst = 0.0;
    for (std::size_t i = 0; i < traj.t.size(); ++i) {
      worst = std::max(worst, std::abs(traj.scales[k][i] - mf.trajectories[k](traj.t[i])));
    }
    CHECK(worst < 1e-9);
  }
}

TEST_CASE("cyclic relabelling permutes the trajectories") {
  std::mt19937 rng(5);
  const CascadeModel m = random_model(rng, 7, 0.5);
  const auto base = simulate_direct(m, 500);
  for (int shift : {1, 3, -2, 9}) {
    const auto moved = simulate_direct(m.shifted(shift), 500);
    for (int k = 0; k < 7; ++k) {
      const auto src = static_cast<std::size_t>(((k + shift) % 7 + 7) % 7);
      CHECK(moved.scales[static_cast<std::size_t>(k)] == base.scales[src]);
    }
  }
  CHECK(&m.force(8) == &m.force(1));
  CHECK(&m.force(0) == &m.force(7));
}

TEST_CASE("reduced problem reproduces the direct simulation") {
  std::mt19937 rng(2024);
  const double gammas[] = {0.5, 1.0, 2.0};
  for (int trial = 0; trial < 6; ++trial) {
    const CascadeModel m = random_model(rng, 7, gammas[trial % 3]);
    const auto direct = simulate_direct(m, 10000);
    const RkTrajectory reduced = rk_solve(reduce(m), 10000);
    double worst = 0.0;
    for (int i = 0; i <= 10000; ++i) {
      worst = std::max(worst, std::abs(direct.top()[static_cast<std::size_t>(i)] - reduced.value(i)));
    }
    CHECK(worst < 1e-6);
  }
}

TEST_CASE("seventh finite difference of the top scale tracks g - gamma^7 y") {
  std::mt19937 rng(17);
  const CascadeModel m = random_model(rng, 7, 1.0);
  const IvpProblem p = reduce(m);
  // Central 8-point stencil for y7 at midpoints; its truncation error is O(h^2).
  auto max_error = [&](int steps) {
    const auto traj = simulate_direct(m, steps);
    const auto& y = traj.top();
    const double h = (m.b - m.a) / steps;
    const int w[8] = {-1, 7, -21, 35, -35, 21, -7, 1};
    double worst = 0.0;
    for (int i = 0; i + 7 <= steps; ++i) {
      double d7 = 0.0;
      for (int k = 0; k < 8; ++k) d7 += w[k] * y[static_cast<std::size_t>(i + k)];
      d7 /= std::pow(h, 7);
      const double t = m.a + (i + 3.5) * h;
      double ymid = 0.0;
      for (int k = 3; k <= 4; ++k) ymid += 0.5 * y[static_cast<std::size_t>(i + k)];
      worst = std::max(worst, std::abs(d7 - (p.g(t) - ymid)));
    }
    return worst;
  };
  const double coarse = max_error(20);
  const double fine = max_error(40);
  CHECK(fine < coarse);
  CHECK(fine < 0.05 * (1.0 + std::abs(p.g(0.5))));
}
