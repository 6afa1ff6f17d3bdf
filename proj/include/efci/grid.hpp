#pragma once

#include "efci/types.hpp"

namespace efci {

class RefinedGrid;

/// Uniform partition x_j = a + j*h, 0 <= j <= P, of [a, b].
///
/// The last node is pinned to b so that refinements of the same interval share
/// endpoints bit-for-bit. At least four nodes are required so that interior
/// interval pairs (1 <= j <= P-2) exist.
class Grid {
 public:
  double a() const { return a_; }
  double b() const { return b_; }
  double h() const { return h_; }
  int intervals() const { return intervals_; }
  int size() const { return intervals_ + 1; }
  const Vector& nodes() const { return nodes_; }
  double node(int j) const { return nodes_[j]; }

 private:
  friend Grid make_grid(double a, double b, double h);
  friend RefinedGrid refine(const Grid& g, int r);

  Grid(double a, double b, double h, int intervals);

  double a_ = 0.0;
  double b_ = 0.0;
  double h_ = 0.0;
  int intervals_ = 0;
  Vector nodes_;
};

/// A coarse grid together with its r-fold refinement (fine step k = h/r).
class RefinedGrid {
 public:
  const Grid& coarse() const { return coarse_; }
  const Grid& fine() const { return fine_; }
  int ratio() const { return r_; }
  /// Fine substep (x_{j+1} - x_j) / r.
  double substep() const { return fine_.h(); }
  /// Fine index of subnode m of coarse interval j.
  int fine_index(int j, int m = 0) const { return j * r_ + m; }

 private:
  friend RefinedGrid refine(const Grid& g, int r);
  RefinedGrid(Grid coarse, Grid fine, int r)
      : coarse_(std::move(coarse)), fine_(std::move(fine)), r_(r) {}

  Grid coarse_;
  Grid fine_;
  int r_;
};

/// Throws Error if b <= a, h <= 0, (b-a)/h is not an integer to 1e-9, or P < 3.
Grid make_grid(double a, double b, double h);

/// Throws Error unless r >= 2 and r is even.
RefinedGrid refine(const Grid& g, int r);

/// t_m = m / r, the local coordinate (x_m - x_j) / h of subnode m.
double local_coordinate(int m, int r);

}  // namespace efci
