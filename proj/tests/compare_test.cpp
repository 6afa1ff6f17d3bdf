#include <gtest/gtest.h>

#include <cmath>

#include "efci/compare.hpp"

namespace efci {
namespace {

struct Pipeline {
  Solution coarse;
  Solution fine;
  InterpolantSolution interp;
  EpsilonContext ctx;
};

Pipeline build(const FluxModel& model, const std::function<double(double)>& u0,
               double h, double dt, int N, int r) {
  const Grid g = make_grid(0.0, 1.0, h);
  const RefinedGrid rg = refine(g, r);
  const Boundary bc{u0(0.0), u0(1.0)};
  const Vector fine_u0 = rg.fine().nodes().unaryExpr(u0);
  Vector coarse_u0(g.size());
  for (int j = 0; j < g.size(); ++j) coarse_u0[j] = fine_u0[j * r];
  Solution coarse = solve(coarse_u0, model, g, dt, N, bc);
  Solution fine = solve(fine_u0, model, rg.fine(), dt / r, N * r, bc);
  InterpolantSolution interp = build_interpolant(coarse);
  EpsilonContext ctx = epsilon_from_initial(fine.row(0), N * r);
  return {std::move(coarse), std::move(fine), std::move(interp), ctx};
}

TEST(CompareTest, ZeroDataIsTheEqualityWitness) {
  const double h = 0.1;
  const int r = 4;
  Pipeline p = build(burgers_flux(), [](double) { return 0.0; }, h, 0.05, 2, r);
  const BoundReport rep = compare(p.coarse, p.fine, p.interp, p.ctx, burgers_flux());
  EXPECT_EQ(rep.eps.eps, 0.0);
  ASSERT_EQ(rep.records.size(), 8u * (r + 1));
  for (const auto& rec : rep.records) {
    EXPECT_EQ(rec.u, 0.0);
    EXPECT_NEAR(rec.abs_err, 6 * h * rec.t * (1 - rec.t), 1e-14);
    if (rec.m == r / 2) {
      EXPECT_NEAR(rec.abs_err, 1.5 * h, 1e-12);
      EXPECT_NEAR(rec.abs_err, rec.thm1, 1e-12);
    }
  }
  EXPECT_NEAR(rep.summary.max_err, 1.5 * h, 1e-12);
  EXPECT_NEAR(rep.summary.max_tightness, 1.0, 1e-12);
  EXPECT_TRUE(rep.all_passed());
  EXPECT_EQ(rep.limit_intervals.size(), 8u);
  EXPECT_TRUE(rep.turbulent_intervals.empty());
}

TEST(CompareTest, NearConstantLinearAdvectionWithinBounds) {
  auto u0 = [](double x) { return 0.5 + 1e-6 * std::sin(3.0 * x); };
  Pipeline p = build(linear_flux(1.0), u0, 0.1, 0.01, 2, 2);
  const BoundReport rep = compare(p.coarse, p.fine, p.interp, p.ctx, linear_flux(1.0));
  EXPECT_TRUE(rep.eps.hypothesis_holds);
  for (const auto& rec : rep.records) EXPECT_LE(rec.abs_err, rec.thm1 + kBoundSlack);
  for (const auto& c : rep.checks) {
    EXPECT_TRUE(c.ok()) << c.family << " " << c.passed << "/" << c.total;
  }
  // Admissible linear case carries the Corollary 4 column everywhere.
  EXPECT_GT(rep.check("corollary4")->total, 0);
  for (const auto& rec : rep.records) EXPECT_TRUE(rec.cor4.has_value());
  EXPECT_EQ(rep.check("corollary5")->total, 0);
}

TEST(CompareTest, BurgersHasNoCorollary4Column) {
  auto u0 = [](double x) { return 0.2 + 1e-6 * x; };
  Pipeline p = build(burgers_flux(), u0, 0.1, 0.05, 3, 2);
  const BoundReport rep = compare(p.coarse, p.fine, p.interp, p.ctx, burgers_flux());
  for (const auto& rec : rep.records) EXPECT_FALSE(rec.cor4.has_value());
  EXPECT_TRUE(rep.all_passed());
}

TEST(CompareTest, TurbulentIntervalsCarryCorollary5) {
  // Zero crossing at x = pi/7 ~ 0.449, between nodes 0.4 and 0.5.
  auto u0 = [](double x) { return 1e-6 * std::sin(7.0 * x); };
  Pipeline p = build(linear_flux(1.0), u0, 0.1, 0.01, 2, 2);
  const BoundReport rep = compare(p.coarse, p.fine, p.interp, p.ctx, linear_flux(1.0));
  EXPECT_EQ(rep.turbulent_intervals, (std::vector<int>{4}));
  for (const auto& rec : rep.records) {
    EXPECT_EQ(rec.turbulent, rec.j == 4);
    EXPECT_EQ(rec.cor5.has_value(), rec.j == 4);
  }
  EXPECT_EQ(rep.check("corollary5")->total, 3);
  EXPECT_TRUE(rep.check("corollary5")->ok());
}

TEST(CompareTest, CostRatioFromUpdateCounts) {
  Pipeline p = build(burgers_flux(), [](double) { return 0.1; }, 0.1, 0.05, 5, 4);
  const BoundReport rep = compare(p.coarse, p.fine, p.interp, p.ctx, burgers_flux());
  EXPECT_EQ(rep.summary.update_count_coarse, 45);
  EXPECT_EQ(rep.summary.update_count_fine, 780);
  EXPECT_DOUBLE_EQ(rep.summary.cost_ratio, 780.0 / 45.0);
}

TEST(CompareTest, RejectsMismatchedRefinement) {
  auto u0 = [](double) { return 0.0; };
  Pipeline p = build(burgers_flux(), u0, 0.1, 0.05, 2, 2);
  const Grid g = p.coarse.grid();
  const RefinedGrid rg = refine(g, 2);

  // Fine trajectory one step short: M != N r.
  const Solution short_fine = solve(u0, burgers_flux(), rg.fine(), 0.025, 3, {});
  try {
    compare(p.coarse, short_fine, p.interp, p.ctx, burgers_flux());
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("M != N r"), std::string::npos);
  }

  // Wrong fine time step: dt r != Dt.
  const Solution slow_fine = solve(u0, burgers_flux(), rg.fine(), 0.02, 4, {});
  try {
    compare(p.coarse, slow_fine, p.interp, p.ctx, burgers_flux());
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("dt r != Dt"), std::string::npos);
  }

  // Fine grid on a different interval: k != h/r.
  const Grid other = make_grid(0.0, 2.0, 0.05);
  const Solution wrong_grid = solve(u0, burgers_flux(), other, 0.025, 4, {});
  EXPECT_THROW(compare(p.coarse, wrong_grid, p.interp, p.ctx, burgers_flux()), Error);
}

TEST(CompareTest, FailedHypothesisSkipsFamilies) {
  auto u0 = [](double x) { return 0.3 + 0.1 * x; };
  Pipeline p = build(burgers_flux(), u0, 0.1, 0.05, 2, 2);
  const EpsilonContext loose = epsilon_context(p.fine.row(0), 4, 1e-9);
  ASSERT_FALSE(loose.hypothesis_holds);
  const BoundReport rep = compare(p.coarse, p.fine, p.interp, loose, burgers_flux());
  for (const auto& c : rep.checks) EXPECT_TRUE(c.skipped) << c.family;
  EXPECT_TRUE(rep.all_passed());
}

TEST(CompareTest, DisabledFamiliesAreNotCounted) {
  Pipeline p = build(burgers_flux(), [](double) { return 0.0; }, 0.1, 0.05, 2, 2);
  CheckSelection sel;
  sel.theorem1 = false;
  const BoundReport rep = compare(p.coarse, p.fine, p.interp, p.ctx, burgers_flux(), sel);
  EXPECT_FALSE(rep.check("theorem1")->enabled);
  EXPECT_EQ(rep.check("theorem1")->total, 0);
}

// Far outside the CFL condition the difference-decay lemmas break; the failures
// must show up in the tallies.
TEST(CompareTest, ViolationsAreRecorded) {
  auto u0 = [](double x) { return 0.5 * std::sin(31.0 * x); };
  Pipeline p = build(linear_flux(25.0), u0, 0.1, 0.1, 2, 2);
  const BoundReport rep = compare(p.coarse, p.fine, p.interp, p.ctx, linear_flux(25.0));
  EXPECT_FALSE(rep.all_passed());
}

}  // namespace
}  // namespace efci
