#include "doctest.h"

#include "nps7/error.hpp"
#include "nps7/fixtures.hpp"
#include "nps7/linsolve.hpp"
#include "nps7/solver.hpp"

#include <algorithm>
#include <numeric>
#include <random>

using namespace nps7;

TEST_CASE("small dense solves") {
  SUBCASE("identity") {
    const Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(5, 5);
    const Eigen::VectorXd b = Eigen::VectorXd::LinSpaced(5, 1.0, 5.0);
    CHECK((lu_solve_dense<double>(eye, b) - b).norm() == 0.0);
  }
  SUBCASE("2x2") {
    Eigen::MatrixXd m(2, 2);
    m << 2, 1, 1, 3;
    Eigen::VectorXd b(2);
    b << 3, 4;
    double rel = -1;
    const Eigen::VectorXd y = lu_solve_dense<double>(m, b, &rel);
    CHECK(y(0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(y(1) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(rel >= 0.0);
    CHECK(rel < 1e-15);
  }
}

TEST_CASE("singular and malformed input") {
  CHECK_THROWS_AS(lu_solve_dense<double>(Eigen::MatrixXd::Zero(3, 3), Eigen::VectorXd::Ones(3)),
                  NumericalError);
  Eigen::MatrixXd rank1(2, 2);
  rank1 << 1, 2, 2, 4;
  CHECK_THROWS_AS(lu_solve_dense<double>(rank1, Eigen::VectorXd::Ones(2)), NumericalError);
  CHECK_THROWS_AS(lu_solve_dense<double>(Eigen::MatrixXd::Identity(3, 3), Eigen::VectorXd::Ones(2)),
                  ValidationError);
  CHECK_THROWS_AS(lu_solve_dense<double>(Eigen::MatrixXd::Zero(0, 0), Eigen::VectorXd::Zero(0)),
                  ValidationError);
}

TEST_CASE("condition estimates") {
  CHECK(condition_estimate_dense(Eigen::MatrixXd::Identity(4, 4)) == doctest::Approx(1.0));
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(2, 2);
  d(0, 0) = 1.0;
  d(1, 1) = 1e-8;
  CHECK(condition_estimate_dense(d) == doctest::Approx(1e8).epsilon(1e-6));
}

TEST_CASE("row permutation does not change the solution") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 12;
    Eigen::MatrixXd m(n, n);
    Eigen::VectorXd b(n);
    for (int i = 0; i < n; ++i) {
      b(i) = dist(rng);
      for (int j = 0; j < n; ++j) m(i, j) = dist(rng);
      m(i, i) += 4.0;
    }
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    Eigen::MatrixXd pm(n, n);
    Eigen::VectorXd pb(n);
    for (int i = 0; i < n; ++i) {
      pm.row(i) = m.row(order[i]);
      pb(i) = b(order[i]);
    }
    const Eigen::VectorXd y = lu_solve_dense<double>(m, b);
    const Eigen::VectorXd py = lu_solve_dense<double>(pm, pb);
    CHECK((y - py).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("spline systems satisfy the backward residual bound") {
  for (const auto& ex : fixtures::all_examples()) {
    for (auto mode : {EndConditionMode::Standard, EndConditionMode::Improved}) {
      for (int n : {12, 24, 48}) {
        const LinearSystem sys = build(ex.problem, optimal_family(0), mode, n);
        const SolutionGrid grid = lu_solve(sys);
        CHECK(grid.relative_residual <= kResidualBound);
        CHECK(grid.size() == static_cast<std::size_t>(n) + 1);
        CHECK(grid.t.front() == ex.problem.a);
        CHECK(grid.t.back() == doctest::Approx(ex.problem.b));
        CHECK(grid.y.front() == ex.problem.u[0]);
        CHECK(condition_estimate(sys) > 1.0);
      }
    }
  }
}

TEST_CASE("precision names and extended solves") {
  CHECK(parse_precision("double") == Precision::Double);
  CHECK(parse_precision("extended") == Precision::Extended);
  CHECK(to_string(Precision::Extended) == "extended");
  CHECK_THROWS_AS(parse_precision("quad"), ValidationError);

  const auto ex = fixtures::example2();
  const auto d = solve_spline(ex.problem, {0, 0, 0, 60}, EndConditionMode::Standard, 20);
  const auto e = solve_spline(ex.problem, {0, 0, 0, 60}, EndConditionMode::Standard, 20,
                              Precision::Extended);
  for (std::size_t i = 0; i < d.size(); ++i) CHECK(e.y[i] == doctest::Approx(d.y[i]).epsilon(1e-6));
}
