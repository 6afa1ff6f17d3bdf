#include "efci/compare.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace efci {

void CheckTally::record(double lhs, double rhs, double slack) {
  const double margin = lhs - rhs;
  if (total == 0 || margin > worst_margin) worst_margin = margin;
  ++total;
  if (lhs <= rhs + slack) ++passed;
}

bool BoundReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckTally& c) { return c.ok(); });
}

const CheckTally* BoundReport::check(const std::string& family) const {
  for (const auto& c : checks)
    if (c.family == family) return &c;
  return nullptr;
}

namespace {

bool close_rel(double x, double y) {
  return std::abs(x - y) <= 1e-12 * std::max({1.0, std::abs(x), std::abs(y)});
}

int validate_refinement(const Solution& coarse, const Solution& fine,
                        const InterpolantSolution& interp,
                        const EpsilonContext& ctx) {
  const Grid& cg = coarse.grid();
  const Grid& fg = fine.grid();
  if (fg.intervals() % cg.intervals() != 0)
    throw Error("compare: fine grid is not a refinement of the coarse grid");
  const int r = fg.intervals() / cg.intervals();
  if (r < 2 || r % 2 != 0)
    throw Error("compare: refinement ratio r=" + std::to_string(r) +
                " must be even and >= 2");
  if (!close_rel(fg.h() * r, cg.h()) || !close_rel(fg.a(), cg.a()) ||
      !close_rel(fg.b(), cg.b())) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "compare: k != h/r (k=" << fg.h() << ", h=" << cg.h() << ", r=" << r
        << ")";
    throw Error(msg.str());
  }
  if (fine.steps() != coarse.steps() * r || ctx.M != fine.steps())
    throw Error("compare: M != N r (M=" + std::to_string(fine.steps()) +
                ", N=" + std::to_string(coarse.steps()) +
                ", r=" + std::to_string(r) +
                ", epsilon context M=" + std::to_string(ctx.M) + ")");
  if (!close_rel(fine.dt() * r, coarse.dt())) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "compare: dt r != Dt (dt=" << fine.dt() << ", Dt=" << coarse.dt()
        << ", r=" << r << ")";
    throw Error(msg.str());
  }
  if (interp.source_step != coarse.steps() ||
      interp.intervals != cg.intervals())
    throw Error("compare: interpolant was not built from the coarse solution");
  return r;
}

// max_i |row_i - row_{i+1}| over trajectory row n and max_i |u^{n+1}_i - u^n_i|.
void check_decay(const RowMatrix& traj, double eps, int steps,
                 CheckTally& diffs, CheckTally& increments, bool want_diffs,
                 bool want_increments) {
  for (int n = 0; n <= steps; ++n) {
    const double allowed = eps / pow3(steps - n);
    if (want_diffs) diffs.record(max_adjacent_diff(traj.row(n).transpose()), allowed, kBoundSlack);
    if (want_increments && n < steps) {
      const double inc = (traj.row(n + 1) - traj.row(n)).cwiseAbs().maxCoeff();
      increments.record(inc, allowed, kBoundSlack);
    }
  }
}

}  // namespace

BoundReport compare(const Solution& coarse, const Solution& fine,
                    const InterpolantSolution& interp,
                    const EpsilonContext& ctx, const FluxModel& model,
                    const CheckSelection& sel) {
  const int r = validate_refinement(coarse, fine, interp, ctx);
  const Grid& cg = coarse.grid();
  const Grid& fg = fine.grid();
  const int N = coarse.steps();
  const int M = fine.steps();
  const double h = cg.h();
  const double eps = ctx.eps;

  BoundReport rep;
  rep.h = h;
  rep.r = r;
  rep.eps = ctx;

  auto tally = [&](const char* name, bool enabled) {
    CheckTally t;
    t.family = name;
    t.enabled = enabled;
    t.skipped = enabled && !ctx.hypothesis_holds;
    return t;
  };
  CheckTally thm1 = tally("theorem1", sel.theorem1);
  CheckTally cor1 = tally("corollary1", sel.corollary1);
  CheckTally cor2 = tally("corollary2", sel.corollary2);
  CheckTally p4 = tally("prop4", sel.prop4);
  CheckTally p5 = tally("prop5", sel.prop5);
  CheckTally p6 = tally("prop6", sel.prop6);
  CheckTally p78 = tally("prop7_8", sel.prop7_8);
  CheckTally p910 = tally("prop9_10", sel.prop9_10);
  CheckTally cor4 = tally("corollary4", sel.corollary4);
  CheckTally cor5 = tally("corollary5", sel.corollary5);
  CheckTally limit = tally("limit_case", sel.limit_case);
  const bool live = ctx.hypothesis_holds;

  // Difference decay on both grids.
  if (live) {
    check_decay(fine.values(), eps, M, p4, p5, p4.enabled, p5.enabled);
    if (cor1.enabled) check_decay(coarse.values(), eps, N, cor1, cor1, true, true);
    if (p6.enabled) {
      const double allowed = eps / pow3(N);
      const Vector w0 = coarse.row(0);
      for (int j = 0; j < cg.intervals(); ++j)
        p6.record(std::abs(w0[j] - w0[j + 1]), allowed, kBoundSlack);
    }
  }

  // Corollary 4 applies to an admissible linear flux.
  std::optional<double> cor4_value;
  if (model.is_linear()) {
    const auto stab = linear_stability_params(model.speed(), h, N, coarse.dt());
    if (stab.admissible) {
      const double u0_sup = fine.values().row(0).cwiseAbs().maxCoeff();
      cor4_value = corollary4_bound(h, cg.a(), cg.b(), N, coarse.dt(), u0_sup, eps);
    }
  }
  const double cor5_value = corollary5_bound(h, eps);

  const auto& u = fine.values();
  rep.records.reserve(interp.pieces.size() * (r + 1));
  for (const auto& piece : interp.pieces) {
    const int j = piece.j;
    const bool turbulent = (piece.d1 < 0.0 && piece.d2 > 0.0) ||
                           (piece.d1 > 0.0 && piece.d2 < 0.0);
    const bool limit_case = piece.d1 == 0.0 && piece.d2 == 0.0;
    if (turbulent) rep.turbulent_intervals.push_back(j);
    if (limit_case) rep.limit_intervals.push_back(j);

    const Vector v = sample(piece, r);
    const double u_left = u(M, r * j);
    const double u_right = u(M, r * (j + 1));

    if (live && cor2.enabled) cor2.record(std::abs(piece.d1 - piece.d2), eps, kDiffSlack);
    if (live && p78.enabled) {
      p78.record(std::abs(v[0] - u_left), eps, kBoundSlack);
      p78.record(std::abs(v[r] - u_right), eps, kBoundSlack);
    }

    for (int m = 0; m <= r; ++m) {
      SubnodeRecord rec;
      rec.j = j;
      rec.m = m;
      rec.x = fg.node(r * j + m);
      rec.t = local_coordinate(m, r);
      rec.v = v[m];
      rec.u = u(M, r * j + m);
      rec.abs_err = std::abs(rec.v - rec.u);
      rec.thm1 = m == 0 ? detail::theorem1_rhs(h, piece.d1, piece.d2, 0, eps)
                        : theorem1_bound(h, piece.d1, piece.d2, m, r, eps);
      rec.turbulent = turbulent;
      if (cor4_value) rec.cor4 = *cor4_value;
      if (turbulent) rec.cor5 = cor5_value;

      rep.summary.max_err = std::max(rep.summary.max_err, rec.abs_err);
      if (m >= 1) {
        rep.summary.max_tightness =
            std::max(rep.summary.max_tightness, rec.abs_err / rec.thm1);
      }
      if (live) {
        if (thm1.enabled && m >= 1) thm1.record(rec.abs_err, rec.thm1, kBoundSlack);
        if (cor4.enabled && rec.cor4) cor4.record(rec.abs_err, *rec.cor4, kBoundSlack);
        if (cor5.enabled && rec.cor5) cor5.record(rec.abs_err, *rec.cor5, kBoundSlack);
        if (limit.enabled && limit_case)
          limit.record(rec.abs_err, 1.5 * h + eps, kBoundSlack);
        if (p910.enabled && m >= 1 && m < r) {
          if (2 * m <= r) p910.record(std::abs(u_left - rec.u), m * eps, kBoundSlack);
          if (2 * m >= r) p910.record(std::abs(rec.u - u_right), (r - m) * eps, kBoundSlack);
        }
      }
      rep.records.push_back(rec);
    }
  }

  rep.summary.update_count_coarse = coarse.update_count();
  rep.summary.update_count_fine = fine.update_count();
  rep.summary.cost_ratio = static_cast<double>(fine.update_count()) /
                           static_cast<double>(coarse.update_count());
  rep.checks = {thm1, cor1, cor2, p4, p5, p6, p78, p910, cor4, cor5, limit};
  return rep;
}

}  // namespace efci
