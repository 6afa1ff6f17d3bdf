#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "efci/types.hpp"

namespace efci {

class Solution;

/// q(t) = a3 t^3 + a2 t^2 + a1 t + a0 on t in [0, 1].
template <typename Scalar>
struct CubicCoeffs {
  Scalar a3{}, a2{}, a1{}, a0{};

  Scalar operator()(Scalar t) const { return ((a3 * t + a2) * t + a1) * t + a0; }
  Scalar derivative(Scalar t) const {
    return (Scalar(3) * a3 * t + Scalar(2) * a2) * t + a1;
  }
};

namespace detail {

template <typename Scalar>
void require_finite(const char* what, std::initializer_list<Scalar> xs) {
  for (Scalar x : xs) {
    using std::isfinite;
    if (!isfinite(x)) throw Error(std::string(what) + ": non-finite input");
  }
}

}  // namespace detail

/// Cubic with q(0) = p1, q(1) = p2, q'(0) = d1, q'(1) = d2.
///
/// The four conditions give a0 and a1 directly; the remaining 2x2 system
/// a3 + a2 = p2 - p1 - d1, 3 a3 + 2 a2 = d2 - d1 is solved by elimination.
template <typename Scalar>
CubicCoeffs<Scalar> cubic_coefficients(Scalar p1, Scalar p2, Scalar d1,
                                       Scalar d2) {
  detail::require_finite<Scalar>("cubic_coefficients", {p1, p2, d1, d2});
  CubicCoeffs<Scalar> q;
  q.a0 = p1;
  q.a1 = d1;
  q.a3 = Scalar(2) * p1 - Scalar(2) * p2 + d1 + d2;
  q.a2 = p2 - p1 - d1 - q.a3;
  return q;
}

/// Quadratic v(t) = q'(t) on one coarse interval [p1, p2] (node coordinates)
/// with endpoint values d1, d2 taken from the coarse solution.
template <typename Scalar>
struct BasicInterpolantPiece {
  int j = 0;
  Scalar p1{}, p2{}, d1{}, d2{};
  Scalar c2{}, c1{}, c0{};

  Scalar operator()(Scalar t) const { return (c2 * t + c1) * t + c0; }
};

using InterpolantPiece = BasicInterpolantPiece<double>;

/// Closed-form coefficients of v = q':
///   c2 = 6 p1 - 6 p2 + 3 d1 + 3 d2,  c1 = -6 p1 + 6 p2 - 4 d1 - 2 d2,  c0 = d1.
template <typename Scalar>
BasicInterpolantPiece<Scalar> piece_from_values(int j, Scalar p1, Scalar p2,
                                                Scalar d1, Scalar d2) {
  detail::require_finite<Scalar>("piece_from_values", {p1, p2, d1, d2});
  if (!(p2 > p1)) throw Error("piece_from_values: need p2 > p1");
  BasicInterpolantPiece<Scalar> piece{j, p1, p2, d1, d2, {}, {}, {}};
  piece.c2 = Scalar(6) * p1 - Scalar(6) * p2 + Scalar(3) * d1 + Scalar(3) * d2;
  piece.c1 = Scalar(-6) * p1 + Scalar(6) * p2 - Scalar(4) * d1 - Scalar(2) * d2;
  piece.c0 = d1;
  return piece;
}

/// v at t_m = m / r for m = 0..r. Throws Error unless r >= 2 is even.
template <typename Scalar>
VectorX<Scalar> sample(const BasicInterpolantPiece<Scalar>& piece, int r) {
  if (r < 2 || r % 2 != 0)
    throw Error("sample: r must be even and >= 2, got " + std::to_string(r));
  VectorX<Scalar> out(r + 1);
  for (int m = 0; m <= r; ++m) out[m] = piece(Scalar(m) / Scalar(r));
  return out;
}

/// Pieces for the interior intervals 1 <= j <= P-2 of a coarse solution.
struct InterpolantSolution {
  std::vector<InterpolantPiece> pieces;
  int source_step = 0;  // N, the coarse step the pieces were built from
  int intervals = 0;    // P of the coarse grid
};

/// Builds from the final row of sol.
InterpolantSolution build_interpolant(const Solution& sol);

}  // namespace efci
