#pragma once

#include <cstdint>
#include <functional>

#include "efci/flux.hpp"
#include "efci/grid.hpp"
#include "efci/types.hpp"

namespace efci {

/// Dirichlet data u(t, a) = left, u(t, b) = right.
struct Boundary {
  double left = 0.0;
  double right = 0.0;
};

/// Full trajectory of an explicit forward-Euler / centered-space solve.
/// Row n holds u^n over all nodes; rows 0..steps().
class Solution {
 public:
  Solution(Grid grid, double dt, RowMatrix values, Boundary boundary,
           std::int64_t update_count)
      : grid_(std::move(grid)),
        dt_(dt),
        values_(std::move(values)),
        boundary_(boundary),
        update_count_(update_count) {}

  const Grid& grid() const { return grid_; }
  double dt() const { return dt_; }
  int steps() const { return static_cast<int>(values_.rows()) - 1; }
  const RowMatrix& values() const { return values_; }
  Vector row(int n) const { return values_.row(n).transpose(); }
  Vector final_row() const { return row(steps()); }
  const Boundary& boundary() const { return boundary_; }
  /// Interior-node updates performed, N (P - 1) after a full solve.
  std::int64_t update_count() const { return update_count_; }

 private:
  Grid grid_;
  double dt_;
  RowMatrix values_;
  Boundary boundary_;
  std::int64_t update_count_;
};

/// Last row only; used when the trajectory is not needed (cost benchmarking).
struct FinalState {
  Vector values;
  std::int64_t update_count = 0;
};

struct CflReport {
  double max_ratio = 0.0;
  bool satisfied = true;
};

struct LinearStability {
  double dt_max = 0.0;  // (h / a)^2
  double growth = 1.0;  // C_N = exp(N dt / 2)
  bool admissible = false;
};

/// One time step: interior nodes u_j - F'(u_j) dt/(2h) (u_{j+1} - u_{j-1}),
/// endpoints pinned to the boundary data.
Vector step(const VectorRef& state, const FluxModel& model, double dt,
            double h, Boundary boundary);

/// N steps from sampled initial data. Throws Error when u0 disagrees with the
/// boundary data by more than 1e-9, or on the first step that produces a
/// non-finite value.
Solution solve(const VectorRef& u0, const FluxModel& model, const Grid& grid,
               double dt, int steps, Boundary boundary);

Solution solve(const std::function<double(double)>& u0, const FluxModel& model,
               const Grid& grid, double dt, int steps, Boundary boundary);

/// Same arithmetic as solve() but keeps two rows.
FinalState solve_final(const VectorRef& u0, const FluxModel& model,
                       const Grid& grid, double dt, int steps,
                       Boundary boundary);

CflReport cfl_report(const Solution& sol, const FluxModel& model);

/// Stability parameters of the linear case F(u) = a u in the norm |.|_2.
LinearStability linear_stability_params(double a, double h, int steps,
                                        double dt);

/// |u|_2 = (h sum_j u_j^2)^(1/2).
double discrete_norm2(const VectorRef& row, double h);

}  // namespace efci
