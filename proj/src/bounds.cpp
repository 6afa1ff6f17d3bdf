#include "efci/bounds.hpp"

#include <limits>
#include <string>

namespace efci {

double pow3(int M) {
  if (M < 0) throw Error("pow3: negative exponent");
  const double value = std::pow(3.0, M);
  if (!std::isfinite(value))
    throw Error("3^" + std::to_string(M) +
                " overflows double; the bound is vacuous at this scale, use a "
                "smaller M = N r");
  return value;
}

double max_adjacent_diff(const VectorRef& row) {
  if (row.size() < 2) return 0.0;
  return (row.tail(row.size() - 1) - row.head(row.size() - 1)).cwiseAbs().maxCoeff();
}

EpsilonContext epsilon_context(const VectorRef& fine_u0, int M, double eps) {
  if (M < 1) throw Error("epsilon: need M >= 1");
  if (!fine_u0.allFinite()) throw Error("epsilon: non-finite initial data");
  EpsilonContext ctx;
  ctx.M = M;
  ctx.eps = eps;
  ctx.max_initial_diff = max_adjacent_diff(fine_u0);
  ctx.hypothesis_holds = ctx.max_initial_diff * pow3(M) <= eps * (1.0 + 1e-12);
  return ctx;
}

EpsilonContext epsilon_from_initial(const VectorRef& fine_u0, int M) {
  if (M < 1) throw Error("epsilon: need M >= 1");
  const double scale = pow3(M);
  return epsilon_context(fine_u0, M, scale * max_adjacent_diff(fine_u0));
}

double prop1_s(double t) {
  if (!(t >= 0.0 && t <= 1.0))
    throw Error("prop1_s: t must lie in [0, 1], got " + std::to_string(t));
  return 4.0 * (t - t * t);
}

double corollary3_delta(double eps, int m, int r, int M) {
  detail::require_subnode("corollary3_delta", m, r);
  if (eps < 0.0) throw Error("corollary3_delta: eps must be >= 0");
  const double mu = eps / (std::min(m, r - m) + 3);
  return mu / pow3(M);
}

double continuity_delta(const std::function<double(double)>& u0, double a,
                        double b, double eps, int samples) {
  if (samples < 1) throw Error("continuity_delta: need at least one interval");
  const double spacing = (b - a) / samples;
  Vector x(samples + 1);
  for (int i = 0; i < samples; ++i) x[i] = a + i * spacing;
  x[samples] = b;
  const Vector u = x.unaryExpr(u0);

  // omega(q): largest difference between samples at most q spacings apart.
  double omega = 0.0;
  int best = 0;
  for (int q = 1; q <= samples; ++q) {
    const auto n = samples + 1 - q;
    omega = std::max(omega, (u.tail(n) - u.head(n)).cwiseAbs().maxCoeff());
    if (omega > eps) break;
    best = q;
  }
  if (best == samples) return std::numeric_limits<double>::infinity();
  return best * spacing;
}

std::optional<int> theorem2_select_r(const std::function<double(double)>& u0,
                                     double a, double b, double eps, int N,
                                     int r_max) {
  if (!(eps > 0.0)) throw Error("theorem2_select_r: eps must be > 0");
  if (N < 2) throw Error("theorem2_select_r: need N > 1");
  if (!(b > a)) throw Error("theorem2_select_r: need a < b");
  const double delta = continuity_delta(u0, a, b, eps, 10 * r_max * N);
  if (!(delta > 0.0)) return std::nullopt;
  for (int r = 2; r <= r_max; r += 2) {
    const double scale = std::pow(3.0, static_cast<double>(r) * N);
    if (!std::isfinite(scale)) break;
    if (eps / scale <= delta) return r;
  }
  return std::nullopt;
}

std::pair<double, double> lemma1_check(const VectorRef& values, int i, int j) {
  if (values.size() == 0) throw Error("lemma1_check: empty value set");
  if (i < 0 || j < 0 || i >= values.size() || j >= values.size())
    throw Error("lemma1_check: index out of range");
  if (!(values.array() > 0.0).all())
    throw Error("lemma1_check: values must be positive");
  return {values[i] + values[j], 2.0 * values.norm()};
}

std::vector<int> detect_turbulence(const VectorRef& row) {
  std::vector<int> out;
  for (Eigen::Index j = 0; j + 1 < row.size(); ++j)
    // Sign test rather than the product, which underflows for tiny values.
    if ((row[j] < 0.0 && row[j + 1] > 0.0) || (row[j] > 0.0 && row[j + 1] < 0.0))
      out.push_back(static_cast<int>(j));
  return out;
}

}  // namespace efci
