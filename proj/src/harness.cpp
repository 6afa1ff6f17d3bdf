#include <future>

#include "efci/harness.hpp"

namespace efci {

namespace {

template <typename Fn>
auto timed(Fn&& fn, std::chrono::duration<double>& wall) {
  const auto start = std::chrono::steady_clock::now();
  auto out = fn();
  wall = std::chrono::steady_clock::now() - start;
  return out;
}

// Errors from a stage are re-raised with the responsible config field.
template <typename Fn>
auto stage(const char* field, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    throw Error(std::string("config field '") + field + "': " + e.what());
  }
}

}  // namespace

RunResult run(const ExperimentConfig& cfg) {
  const Grid coarse_grid = stage("h", [&] { return make_grid(cfg.a, cfg.b, cfg.h); });
  const RefinedGrid grids = stage("r", [&] { return refine(coarse_grid, cfg.r); });
  const FluxModel model =
      stage("flux", [&] { return make_flux(cfg.flux_name, cfg.flux_params); });
  const auto u0 = cfg.u0.function(cfg.a, cfg.b);
  const Boundary bc = cfg.boundary.value_or(Boundary{u0(cfg.a), u0(cfg.b)});

  // Coarse samples are taken from the fine ones so that w^0_j = u^0_{jr} holds
  // bit-for-bit.
  const Vector fine_u0 = grids.fine().nodes().unaryExpr(u0);
  Vector coarse_u0(coarse_grid.size());
  for (int j = 0; j < coarse_grid.size(); ++j) coarse_u0[j] = fine_u0[j * cfg.r];

  const int M = cfg.N * cfg.r;
  const double fine_dt = cfg.dt / cfg.r;

  RunResult result;
  result.config = cfg;
  auto fine_job = std::async(std::launch::async, [&] {
    return timed([&] { return solve(fine_u0, model, grids.fine(), fine_dt, M, bc); },
                 result.costs.wall_fine);
  });
  std::optional<Solution> coarse;
  try {
    coarse = timed(
        [&] { return solve(coarse_u0, model, coarse_grid, cfg.dt, cfg.N, bc); },
        result.costs.wall_coarse);
  } catch (const Error& e) {
    fine_job.wait();
    throw Error(std::string("coarse solve (config fields 'dt', 'N', 'u0'): ") + e.what());
  }
  std::optional<Solution> fine;
  try {
    fine = fine_job.get();
  } catch (const Error& e) {
    throw Error(std::string("fine solve (config fields 'dt', 'N', 'r', 'u0'): ") + e.what());
  }

  const InterpolantSolution interp = build_interpolant(*coarse);
  const EpsilonContext ctx = stage("N", [&] {
    return cfg.eps ? epsilon_context(fine->row(0), M, *cfg.eps)
                   : epsilon_from_initial(fine->row(0), M);
  });

  result.report = compare(*coarse, *fine, interp, ctx, model, cfg.checks);
  result.costs.coarse_updates = coarse->update_count();
  result.costs.fine_updates = fine->update_count();
  result.costs.interp_ops = static_cast<std::int64_t>(interp.pieces.size()) * (cfg.r + 2);
  result.cfl_coarse = cfl_report(*coarse, model);
  result.cfl_fine = cfl_report(*fine, model);
  return result;
}

}  // namespace efci
