#include "efci/interpolant.hpp"

#include "efci/efc_solver.hpp"

namespace efci {

InterpolantSolution build_interpolant(const Solution& sol) {
  const Grid& grid = sol.grid();
  const int P = grid.intervals();
  if (P < 3) throw Error("build_interpolant: need at least two interior nodes");

  InterpolantSolution out;
  out.source_step = sol.steps();
  out.intervals = P;
  out.pieces.reserve(P - 2);
  const auto& w = sol.values();
  const int N = sol.steps();
  for (int j = 1; j <= P - 2; ++j)
    out.pieces.push_back(piece_from_values(j, grid.node(j), grid.node(j + 1),
                                           w(N, j), w(N, j + 1)));
  return out;
}

}  // namespace efci
