#include <cstdio>
#include <fstream>
#include <sstream>

#include "efci/harness.hpp"

namespace efci {

const char* const kCsvHeader =
    "j,m,x,t_m,v_m,u_m,abs_err,thm1_bound,cor4_bound,cor5_bound,turbulent";

namespace {

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string fmt_short(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

std::string tally_line(const CheckTally& c) {
  std::ostringstream out;
  out << c.family << ": ";
  if (!c.enabled) {
    out << "DISABLED";
  } else if (c.skipped) {
    out << "SKIPPED (eps hypothesis does not hold)";
  } else if (c.total == 0) {
    out << "N/A (no applicable checks)";
  } else {
    out << (c.passed == c.total ? "PASS" : "FAIL") << " (" << c.passed << "/"
        << c.total << ")";
    if (c.passed != c.total) out << " worst excess " << fmt_short(c.worst_margin);
  }
  return out.str();
}

std::string index_list(const std::vector<int>& xs) {
  if (xs.empty()) return "none";
  std::ostringstream out;
  for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? " " : "") << xs[i];
  return out.str();
}

}  // namespace

void write_csv(const BoundReport& report, std::ostream& os) {
  os << kCsvHeader << '\n';
  for (const auto& rec : report.records) {
    os << rec.j << ',' << rec.m << ',' << fmt17(rec.x) << ',' << fmt17(rec.t)
       << ',' << fmt17(rec.v) << ',' << fmt17(rec.u) << ',' << fmt17(rec.abs_err)
       << ',' << fmt17(rec.thm1) << ',' << (rec.cor4 ? fmt17(*rec.cor4) : "")
       << ',' << (rec.cor5 ? fmt17(*rec.cor5) : "") << ','
       << (rec.turbulent ? 1 : 0) << '\n';
  }
}

void emit_csv(const BoundReport& report, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write CSV to '" + path.string() + "'");
  write_csv(report, out);
  out.flush();
  if (!out) throw Error("failed writing CSV to '" + path.string() + "'");
}

std::string summarize(const RunResult& res) {
  const auto& cfg = res.config;
  const auto& rep = res.report;
  std::ostringstream out;
  out << "experiment: flux=" << cfg.flux_name << " h=" << fmt_short(cfg.h)
      << " dt=" << fmt_short(cfg.dt) << " N=" << cfg.N << " r=" << cfg.r
      << " M=" << cfg.N * cfg.r << '\n';
  out << "eps: " << fmt_short(rep.eps.eps) << " (max initial fine diff "
      << fmt_short(rep.eps.max_initial_diff) << ", hypothesis "
      << (rep.eps.hypothesis_holds ? "holds" : "FAILS") << ")\n";
  out << "max error: " << fmt_short(rep.summary.max_err) << '\n';
  out << "max tightness: " << fmt_short(rep.summary.max_tightness) << '\n';
  for (const auto& c : rep.checks) out << tally_line(c) << '\n';
  out << "turbulent intervals: " << index_list(rep.turbulent_intervals) << '\n';
  out << "limit-case intervals: " << index_list(rep.limit_intervals) << '\n';

  const auto& cost = res.costs;
  out << "cost: coarse_updates=" << cost.coarse_updates
      << " fine_updates=" << cost.fine_updates << " ratio="
      << fmt_short(static_cast<double>(cost.fine_updates) / cost.coarse_updates)
      << " (r^2=" << cfg.r * cfg.r << ") interp_ops=" << cost.interp_ops << '\n';
  out << "wall: coarse " << fmt_short(cost.wall_coarse.count() * 1e3)
      << " ms, fine " << fmt_short(cost.wall_fine.count() * 1e3) << " ms\n";

  const double cfl = std::max(res.cfl_coarse.max_ratio, res.cfl_fine.max_ratio);
  const bool cfl_ok = res.cfl_coarse.satisfied && res.cfl_fine.satisfied;
  out << "CFL: " << (cfl_ok ? "OK" : "VIOLATED") << " (max ratio "
      << fmt_short(cfl) << ")\n";
  out << "result: " << (rep.all_passed() ? "ALL CHECKS PASSED" : "BOUND VIOLATED")
      << '\n';
  return out.str();
}

}  // namespace efci
