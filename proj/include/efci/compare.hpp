#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "efci/bounds.hpp"
#include "efci/efc_solver.hpp"
#include "efci/flux.hpp"
#include "efci/interpolant.hpp"

namespace efci {

/// Absolute slack for every bound inequality.
inline constexpr double kBoundSlack = 1e-9;
/// Slack for |d1 - d2| <= eps.
inline constexpr double kDiffSlack = 1e-12;

/// One subnode m of coarse interval j.
struct SubnodeRecord {
  int j = 0;
  int m = 0;
  double x = 0.0;
  double t = 0.0;
  double v = 0.0;        // interpolant v(t_m)
  double u = 0.0;        // fine solution at step M, node j r + m
  double abs_err = 0.0;  // |v - u|
  double thm1 = 0.0;
  std::optional<double> cor4;
  std::optional<double> cor5;
  bool turbulent = false;
};

/// Pass/fail count for one family of inequalities.
struct CheckTally {
  std::string family;
  int passed = 0;
  int total = 0;
  bool enabled = true;
  bool skipped = false;  // enabled, but its hypothesis does not hold
  double worst_margin = 0.0;  // max over checks of lhs - rhs

  bool ok() const { return !enabled || skipped || passed == total; }
  void record(double lhs, double rhs, double slack);
};

/// Families toggled by the experiment configuration.
struct CheckSelection {
  bool theorem1 = true;
  bool corollary1 = true;
  bool corollary2 = true;
  bool prop4 = true;
  bool prop5 = true;
  bool prop6 = true;
  bool prop7_8 = true;
  bool prop9_10 = true;
  bool corollary4 = true;
  bool corollary5 = true;
  bool limit_case = true;
};

struct BoundSummary {
  double max_err = 0.0;
  double max_tightness = 0.0;  // max abs_err / thm1 over 1 <= m <= r
  std::int64_t update_count_coarse = 0;
  std::int64_t update_count_fine = 0;
  double cost_ratio = 0.0;
};

struct BoundReport {
  double h = 0.0;
  int r = 0;
  EpsilonContext eps;
  std::vector<SubnodeRecord> records;
  std::vector<CheckTally> checks;
  std::vector<int> turbulent_intervals;  // interior pieces only
  std::vector<int> limit_intervals;      // d1 = d2 = 0
  BoundSummary summary;

  bool all_passed() const;
  const CheckTally* check(const std::string& family) const;
};

/// Compares the interpolant of the coarse solution against the fine solution
/// on every subnode of every interior piece, evaluating each bound family.
///
/// The fine solve must be the r-fold refinement of the coarse one in space and
/// time (k = h/r, dt = Dt/r, M = N r); otherwise Error names the broken
/// relation. Subnodes m = 0..r are recorded per piece. The Theorem 1 tally
/// covers 1 <= m <= r; the m = 0 record carries the same formula with a zero
/// min term.
BoundReport compare(const Solution& coarse, const Solution& fine,
                    const InterpolantSolution& interp,
                    const EpsilonContext& ctx, const FluxModel& model,
                    const CheckSelection& checks = {});

}  // namespace efci
