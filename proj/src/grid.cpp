#include "efci/grid.hpp"

#include <cmath>
#include <sstream>

namespace efci {

namespace {

constexpr double kDivisibilityTol = 1e-9;
constexpr int kMinIntervals = 3;

}  // namespace

Grid::Grid(double a, double b, double h, int intervals)
    : a_(a), b_(b), h_(h), intervals_(intervals), nodes_(intervals + 1) {
  for (int j = 0; j < intervals; ++j) nodes_[j] = a + j * h;
  nodes_[intervals] = b;
}

Grid make_grid(double a, double b, double h) {
  if (!std::isfinite(a) || !std::isfinite(b) || !(b > a))
    throw Error("grid: need finite a < b, got a=" + std::to_string(a) +
                " b=" + std::to_string(b));
  if (!std::isfinite(h) || !(h > 0.0))
    throw Error("grid: step h must be positive, got " + std::to_string(h));

  const double ratio = (b - a) / h;
  const double rounded = std::round(ratio);
  const double residual = ratio - rounded;
  if (std::abs(residual) > kDivisibilityTol * std::max(1.0, std::abs(ratio))) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "grid: (b-a)/h = " << ratio << " is not an integer (residual "
        << residual << ")";
    throw Error(msg.str());
  }
  const int intervals = static_cast<int>(rounded);
  if (intervals < kMinIntervals)
    throw Error("grid: need P >= 3 intervals, got P=" +
                std::to_string(intervals));
  return Grid(a, b, h, intervals);
}

RefinedGrid refine(const Grid& g, int r) {
  if (r < 2 || r % 2 != 0)
    throw Error("refine: ratio r must be even and >= 2, got r=" +
                std::to_string(r));
  Grid fine(g.a(), g.b(), g.h() / r, g.intervals() * r);
  return RefinedGrid(g, std::move(fine), r);
}

double local_coordinate(int m, int r) {
  if (r < 1 || m < 0 || m > r)
    throw Error("local_coordinate: need 0 <= m <= r, got m=" +
                std::to_string(m) + " r=" + std::to_string(r));
  return static_cast<double>(m) / r;
}

}  // namespace efci
