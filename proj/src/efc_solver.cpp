#include "efci/efc_solver.hpp"

#include <cmath>
#include <sstream>

namespace efci {

namespace {

constexpr double kCompatibilityTol = 1e-9;

void check_step_args(Eigen::Index n, double dt, double h) {
  if (n < 3)
    throw Error("step: row needs at least one interior node, got length " +
                std::to_string(n));
  if (!(dt > 0.0) || !(h > 0.0)) throw Error("step: dt and h must be positive");
}

// Writes u^{n+1} into next. Finiteness is checked by the caller.
void advance(const VectorRef& cur, Eigen::Ref<Vector> next,
             const FluxModel& model, double lambda, Boundary boundary) {
  const Eigen::Index last = cur.size() - 1;
  for (Eigen::Index j = 1; j < last; ++j)
    next[j] = cur[j] - model.derivative(cur[j]) * lambda * (cur[j + 1] - cur[j - 1]);
  next[0] = boundary.left;
  next[last] = boundary.right;
}

Eigen::Index first_non_finite(const VectorRef& row) {
  for (Eigen::Index j = 0; j < row.size(); ++j)
    if (!std::isfinite(row[j])) return j;
  return -1;
}

void check_compatible(const VectorRef& u0, const Grid& grid, Boundary bc) {
  if (u0.size() != grid.size())
    throw Error("solve: initial data has " + std::to_string(u0.size()) +
                " samples for a grid of " + std::to_string(grid.size()) +
                " nodes");
  if (auto bad = first_non_finite(u0); bad >= 0)
    throw Error("solve: non-finite initial value at node " +
                std::to_string(bad));
  const double gap_left = std::abs(u0[0] - bc.left);
  const double gap_right = std::abs(u0[u0.size() - 1] - bc.right);
  if (gap_left > kCompatibilityTol || gap_right > kCompatibilityTol) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "solve: initial data incompatible with boundary values (u0(a) - u_a = "
        << u0[0] - bc.left << ", u0(b) - u_b = " << u0[u0.size() - 1] - bc.right
        << ")";
    throw Error(msg.str());
  }
}

void check_solve_args(double dt, int steps) {
  if (steps < 1) throw Error("solve: need N >= 1 steps");
  if (!(dt > 0.0) || !std::isfinite(dt)) throw Error("solve: dt must be positive");
}

[[noreturn]] void throw_unstable(int n, Eigen::Index node) {
  throw Error("solve: non-finite value at step " + std::to_string(n) +
              ", node " + std::to_string(node) + " (scheme unstable)");
}

}  // namespace

Vector step(const VectorRef& state, const FluxModel& model, double dt,
            double h, Boundary boundary) {
  check_step_args(state.size(), dt, h);
  if (auto bad = first_non_finite(state); bad >= 0)
    throw Error("step: non-finite input at node " + std::to_string(bad));
  Vector next(state.size());
  advance(state, next, model, dt / (2.0 * h), boundary);
  return next;
}

Solution solve(const VectorRef& u0, const FluxModel& model, const Grid& grid,
               double dt, int steps, Boundary boundary) {
  check_solve_args(dt, steps);
  check_compatible(u0, grid, boundary);

  const double lambda = dt / (2.0 * grid.h());
  RowMatrix values(steps + 1, grid.size());
  values.row(0) = u0.transpose();
  // Row 0 is pinned too; it already matches the boundary data to 1e-9.
  values(0, 0) = boundary.left;
  values(0, grid.intervals()) = boundary.right;

  for (int n = 0; n < steps; ++n) {
    Vector cur = values.row(n).transpose();
    Vector next(grid.size());
    advance(cur, next, model, lambda, boundary);
    if (auto bad = first_non_finite(next); bad >= 0) throw_unstable(n + 1, bad);
    values.row(n + 1) = next.transpose();
  }
  const std::int64_t updates =
      static_cast<std::int64_t>(steps) * (grid.intervals() - 1);
  return Solution(grid, dt, std::move(values), boundary, updates);
}

Solution solve(const std::function<double(double)>& u0, const FluxModel& model,
               const Grid& grid, double dt, int steps, Boundary boundary) {
  Vector samples = grid.nodes().unaryExpr(u0);
  return solve(samples, model, grid, dt, steps, boundary);
}

FinalState solve_final(const VectorRef& u0, const FluxModel& model,
                       const Grid& grid, double dt, int steps,
                       Boundary boundary) {
  check_solve_args(dt, steps);
  check_compatible(u0, grid, boundary);

  const double lambda = dt / (2.0 * grid.h());
  Vector cur = u0;
  cur[0] = boundary.left;
  cur[cur.size() - 1] = boundary.right;
  Vector next(cur.size());
  for (int n = 0; n < steps; ++n) {
    advance(cur, next, model, lambda, boundary);
    if (auto bad = first_non_finite(next); bad >= 0) throw_unstable(n + 1, bad);
    cur.swap(next);
  }
  return {std::move(cur),
          static_cast<std::int64_t>(steps) * (grid.intervals() - 1)};
}

CflReport cfl_report(const Solution& sol, const FluxModel& model) {
  const double scale = sol.dt() / sol.grid().h();
  double worst = 0.0;
  const RowMatrix& v = sol.values();
  for (Eigen::Index n = 0; n < v.rows(); ++n)
    for (Eigen::Index j = 0; j < v.cols(); ++j)
      worst = std::max(worst, std::abs(model.derivative(v(n, j))) * scale);
  return {worst, worst <= 1.0 + 1e-12};
}

LinearStability linear_stability_params(double a, double h, int steps,
                                        double dt) {
  if (a == 0.0) throw Error("linear stability: speed a must be nonzero");
  if (!(h > 0.0)) throw Error("linear stability: h must be positive");
  LinearStability out;
  out.dt_max = (h / a) * (h / a);
  out.growth = std::exp(steps * dt / 2.0);
  out.admissible = dt <= out.dt_max && h <= std::abs(a);
  return out;
}

double discrete_norm2(const VectorRef& row, double h) {
  return std::sqrt(h * row.squaredNorm());
}

}  // namespace efci
