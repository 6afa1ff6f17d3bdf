#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "efci/types.hpp"

namespace efci {

/// 3^M in floating point. Throws Error when the result is not representable.
double pow3(int M);

/// Smallness hypothesis max_i |u0_i - u0_{i+1}| <= eps / 3^M on the fine grid.
struct EpsilonContext {
  int M = 0;
  double eps = 0.0;
  double max_initial_diff = 0.0;
  bool hypothesis_holds = false;
};

/// max_i |row_i - row_{i+1}|.
double max_adjacent_diff(const VectorRef& row);

/// Tightest eps for which the hypothesis holds: eps = 3^M max_i |u0_i - u0_{i+1}|.
EpsilonContext epsilon_from_initial(const VectorRef& fine_u0, int M);

/// Context for a caller-chosen eps; the hypothesis may then fail.
EpsilonContext epsilon_context(const VectorRef& fine_u0, int M, double eps);

/// s = 4 (t - t^2) in [0, 1], so that t^2 = t - s/4.
double prop1_s(double t);

/// (3/2) h + 2 |d1 - d2| + (3/4) |d1 + d2|; bounds |v_m - v_0| and |v_m - v_r|.
template <typename Scalar>
Scalar prop23_bound(Scalar h, Scalar d1, Scalar d2) {
  using std::abs;
  return Scalar(1.5) * h + Scalar(2) * abs(d1 - d2) + Scalar(0.75) * abs(d1 + d2);
}

namespace detail {

// Theorem 1 right-hand side with the min term supplied; m = 0 gives the value
// used for piece endpoints.
template <typename Scalar>
Scalar theorem1_rhs(Scalar h, Scalar d1, Scalar d2, int min_term, Scalar eps) {
  using std::abs;
  return Scalar(1.5) * h + Scalar(0.75) * abs(d1 + d2) +
         Scalar(min_term + 3) * eps;
}

inline void require_subnode(const char* what, int m, int r) {
  if (m < 1 || m > r)
    throw Error(std::string(what) + ": need 1 <= m <= r, got m=" +
                std::to_string(m) + " r=" + std::to_string(r));
}

}  // namespace detail

/// (3/2) h + (3/4) |d1 + d2| + (min(m, r - m) + 3) eps, for 1 <= m <= r.
template <typename Scalar>
Scalar theorem1_bound(Scalar h, Scalar d1, Scalar d2, int m, int r,
                      Scalar eps) {
  detail::require_subnode("theorem1_bound", m, r);
  return detail::theorem1_rhs(h, d1, d2, std::min(m, r - m), eps);
}

/// delta = mu / 3^M with mu = eps / (min(m, r - m) + 3).
double corollary3_delta(double eps, int m, int r, int M);

/// Largest spacing d (up to b - a) such that every pair of samples of u0 at
/// most d apart differs by <= eps, probed on samples + 1 uniform points.
/// Returns +inf when the whole interval qualifies and 0 when no probed spacing
/// does.
double continuity_delta(const std::function<double(double)>& u0, double a,
                        double b, double eps, int samples);

/// Smallest even r <= r_max with eps / 3^(r N) <= delta(eps); nullopt if none.
std::optional<int> theorem2_select_r(const std::function<double(double)>& u0,
                                     double a, double b, double eps, int N,
                                     int r_max);

/// (values[i] + values[j], 2 (sum values^2)^(1/2)). All values must be > 0.
std::pair<double, double> lemma1_check(const VectorRef& values, int i, int j);

/// (3/2) [h + ((b-a)/h + 1)^(1/2) e^(N dt/2) |u0|_inf] + eps.
template <typename Scalar>
Scalar corollary4_bound(Scalar h, Scalar a_dom, Scalar b_dom, int N, Scalar dt,
                        Scalar u0_sup, Scalar eps) {
  using std::exp;
  using std::sqrt;
  const Scalar nodes = (b_dom - a_dom) / h + Scalar(1);
  return Scalar(1.5) * (h + sqrt(nodes) * exp(Scalar(N) * dt / Scalar(2)) * u0_sup) +
         eps;
}

/// Intervals j with row[j] * row[j+1] < 0.
std::vector<int> detect_turbulence(const VectorRef& row);

/// (1/2) (3 h + 5 eps).
template <typename Scalar>
Scalar corollary5_bound(Scalar h, Scalar eps) {
  return Scalar(0.5) * (Scalar(3) * h + Scalar(5) * eps);
}

}  // namespace efci
