#include <gtest/gtest.h>

#include <cmath>
#include <cstring>
#include <limits>
#include <random>

#include "efci/bounds.hpp"
#include "efci/efc_solver.hpp"

namespace efci {
namespace {

Vector row(std::initializer_list<double> xs) {
  Vector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) v[i++] = x;
  return v;
}

TEST(StepTest, ConstantRowIsFixedPoint) {
  for (const FluxModel& f : {linear_flux(0.7), burgers_flux()}) {
    const Vector next = step(row({3, 3, 3, 3, 3}), f, 0.01, 0.1, {3, 3});
    for (Eigen::Index j = 0; j < next.size(); ++j) EXPECT_EQ(next[j], 3.0);
  }
}

// Hand-evaluated updates, u_j - F'(u_j) dt/(2h) (u_{j+1} - u_{j-1}).
TEST(StepTest, LinearHandEvaluation) {
  const Vector next = step(row({1, 2, 4}), linear_flux(1.0), 0.25, 0.5, {1, 4});
  EXPECT_NEAR(next[1], 1.25, 1e-12);
  EXPECT_EQ(next[0], 1.0);
  EXPECT_EQ(next[2], 4.0);
}

TEST(StepTest, BurgersHandEvaluation) {
  const Vector next = step(row({0, 1, 2}), burgers_flux(), 0.5, 1.0, {0, 2});
  EXPECT_NEAR(next[1], 0.5, 1e-12);
}

TEST(StepTest, RejectsNonFiniteInputNamingNode) {
  try {
    step(row({0, 1, std::numeric_limits<double>::quiet_NaN(), 2}), burgers_flux(),
         0.1, 1.0, {0, 2});
    FAIL() << "expected rejection";
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("node 2"), std::string::npos) << e.what();
  }
}

TEST(SolveTest, ConstantPreservedForLinearFlux) {
  const Grid g = make_grid(0.0, 1.0, 0.1);
  const Solution sol = solve([](double) { return 3.0; }, linear_flux(0.5), g,
                             0.01, 7, {3.0, 3.0});
  EXPECT_EQ(sol.steps(), 7);
  EXPECT_TRUE((sol.values().array() == 3.0).all());
}

TEST(SolveTest, TwoStepsEqualComposedSteps) {
  const Grid g = make_grid(0.0, 1.0, 0.25);
  const FluxModel f = linear_flux(1.0);
  const Vector u0 = row({0.0, 0.3, -0.2, 0.9, 1.0});
  const Solution sol = solve(u0, f, g, 0.1, 2, {0.0, 1.0});
  const Vector twice = step(step(u0, f, 0.1, 0.25, {0, 1}), f, 0.1, 0.25, {0, 1});
  for (Eigen::Index j = 0; j < twice.size(); ++j) EXPECT_EQ(sol.values()(2, j), twice[j]);
}

TEST(SolveTest, BurgersSingleStepOracle) {
  // u0 = x, h = 0.25, dt = 0.1: u_j -> x_j - x_j (0.1/0.5)(0.5) = 0.9 x_j.
  const Grid g = make_grid(0.0, 1.0, 0.25);
  const Solution sol = solve([](double x) { return x; }, burgers_flux(), g, 0.1, 1,
                             {0.0, 1.0});
  EXPECT_NEAR(sol.values()(1, 1), 0.225, 1e-15);
  EXPECT_NEAR(sol.values()(1, 2), 0.45, 1e-15);
  EXPECT_NEAR(sol.values()(1, 3), 0.675, 1e-15);
  EXPECT_EQ(sol.values()(1, 0), 0.0);
  EXPECT_EQ(sol.values()(1, 4), 1.0);
  EXPECT_EQ(sol.update_count(), 3);
}

TEST(SolveTest, BoundaryPinnedAndUpdateCount) {
  const Grid g = make_grid(0.0, 1.0, 0.1);
  const Solution sol = solve([](double x) { return 1.0 + std::sin(3.0 * x); },
                             burgers_flux(), g, 0.02, 12,
                             {1.0, 1.0 + std::sin(3.0)});
  for (int n = 0; n <= sol.steps(); ++n) {
    EXPECT_EQ(sol.values()(n, 0), 1.0);
    EXPECT_EQ(sol.values()(n, 10), 1.0 + std::sin(3.0));
  }
  EXPECT_EQ(sol.update_count(), 12 * 9);
}

TEST(SolveTest, RejectsIncompatibleBoundary) {
  const Grid g = make_grid(0.0, 1.0, 0.25);
  EXPECT_THROW(solve([](double x) { return x; }, burgers_flux(), g, 0.1, 1, {0.1, 1.0}),
               Error);
  EXPECT_THROW(solve([](double x) { return x; }, burgers_flux(), g, 0.1, 0, {0.0, 1.0}),
               Error);
}

TEST(SolveTest, BlowUpReportsStep) {
  // CFL ratio 200: oscillations grow until the values overflow.
  const Grid g = make_grid(0.0, 1.0, 0.01);
  try {
    solve([](double x) { return std::sin(50.0 * x) * x * (1 - x); }, linear_flux(200.0),
          g, 0.01, 400, {0.0, 0.0});
    FAIL() << "expected instability";
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("step"), std::string::npos) << e.what();
  }
}

TEST(SolveTest, Deterministic) {
  const Grid g = make_grid(0.0, 1.0, 0.05);
  auto u0 = [](double x) { return std::cos(4.0 * x); };
  const Solution a = solve(u0, burgers_flux(), g, 0.01, 25, {1.0, std::cos(4.0)});
  const Solution b = solve(u0, burgers_flux(), g, 0.01, 25, {1.0, std::cos(4.0)});
  EXPECT_EQ(0, std::memcmp(a.values().data(), b.values().data(),
                           sizeof(double) * a.values().size()));
}

TEST(SolveTest, FinalOnlyModeMatchesTrajectory) {
  const Grid g = make_grid(0.0, 2.0, 0.1);
  const Vector u0 = g.nodes().unaryExpr([](double x) { return std::sin(x); });
  const Boundary bc{u0[0], u0[u0.size() - 1]};
  const Solution full = solve(u0, burgers_flux(), g, 0.01, 30, bc);
  const FinalState last = solve_final(u0, burgers_flux(), g, 0.01, 30, bc);
  EXPECT_EQ(last.update_count, full.update_count());
  EXPECT_TRUE((last.values.array() == full.final_row().array()).all());
}

TEST(CflTest, Examples) {
  const Grid g = make_grid(0.0, 4.0, 1.0);
  const Solution lin2 = solve([](double) { return 0.0; }, linear_flux(2.0), g, 0.5, 1, {});
  EXPECT_DOUBLE_EQ(cfl_report(lin2, linear_flux(2.0)).max_ratio, 1.0);
  EXPECT_TRUE(cfl_report(lin2, linear_flux(2.0)).satisfied);

  const Solution lin3 = solve([](double) { return 0.0; }, linear_flux(3.0), g, 0.5, 1, {});
  EXPECT_DOUBLE_EQ(cfl_report(lin3, linear_flux(3.0)).max_ratio, 1.5);
  EXPECT_FALSE(cfl_report(lin3, linear_flux(3.0)).satisfied);

  // Any stored data with |u| <= 1 and dt = h.
  const Grid fine = make_grid(0.0, 1.0, 0.1);
  const RowMatrix values = RowMatrix::Random(6, fine.size());
  const Solution burg(fine, 0.1, values, {}, 0);
  const CflReport rep = cfl_report(burg, burgers_flux());
  EXPECT_LE(rep.max_ratio, 1.0);
  EXPECT_TRUE(rep.satisfied);
}

TEST(LinearStabilityTest, Examples) {
  const LinearStability s = linear_stability_params(1.0, 0.1, 2, 0.01);
  EXPECT_NEAR(s.dt_max, 0.01, 1e-15);
  EXPECT_NEAR(s.growth, 1.010050167084168, 1e-12);  // e^0.01
  EXPECT_TRUE(s.admissible);

  EXPECT_FALSE(linear_stability_params(1.0, 0.1, 2, 0.02).admissible);

  const LinearStability fast = linear_stability_params(2.0, 0.1, 5, 0.0025);
  EXPECT_TRUE(fast.admissible);
  // |a| dt / h <= h / |a| <= 1
  EXPECT_LE(2.0 * fast.dt_max / 0.1, 0.1 / 2.0 + 1e-15);
  EXPECT_DOUBLE_EQ(0.1 / 2.0, 0.05);

  EXPECT_THROW(linear_stability_params(0.0, 0.1, 2, 0.01), Error);
}

TEST(DiscreteNormTest, Examples) {
  EXPECT_DOUBLE_EQ(discrete_norm2(row({1, 1, 1, 1}), 0.25), 1.0);
  EXPECT_EQ(discrete_norm2(Vector::Zero(6), 0.1), 0.0);
  EXPECT_DOUBLE_EQ(discrete_norm2(row({3}), 1.0), 3.0);
}

// |u^n|_2 <= e^(n dt/2) |u^0|_2 under h <= |a|, dt <= (h/a)^2 with homogeneous
// boundary data.
TEST(LinearStabilityTest, NormGrowthBoundedOnRandomData) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  const Grid g = make_grid(0.0, 1.0, 0.1);
  for (int trial = 0; trial < 200; ++trial) {
    Vector u0(g.size());
    for (Eigen::Index j = 0; j < u0.size(); ++j) u0[j] = dist(rng);
    u0[0] = u0[u0.size() - 1] = 0.0;
    const Solution sol = solve(u0, linear_flux(1.0), g, 0.01, 10, {0.0, 0.0});
    const double base = discrete_norm2(u0, g.h());
    for (int n = 0; n <= 10; ++n)
      ASSERT_LE(discrete_norm2(sol.row(n), g.h()), std::exp(n * 0.01 / 2) * base + 1e-9)
          << "trial " << trial << " step " << n;
  }
}

// Differences contract under CFL: the induction lemmas on adjacent differences
// and increments.
TEST(SolveTest, DifferenceDecayUnderSmallInitialDifferences) {
  const Grid g = make_grid(0.0, 1.0, 0.05);
  const int M = 8;
  auto u0 = [](double x) { return 0.3 + 1e-6 * std::sin(5.0 * x); };
  for (const FluxModel& f : {linear_flux(1.0), burgers_flux()}) {
    const Solution sol = solve(u0, f, g, 0.04, M, {u0(0.0), u0(1.0)});
    const double eps = pow3(M) * max_adjacent_diff(sol.row(0));
    for (int n = 0; n <= M; ++n) {
      EXPECT_LE(max_adjacent_diff(sol.row(n)), eps / pow3(M - n) + 1e-15);
      if (n < M)
        EXPECT_LE((sol.row(n + 1) - sol.row(n)).cwiseAbs().maxCoeff(),
                  eps / pow3(M - n) + 1e-15);
    }
  }
}

}  // namespace
}  // namespace efci
