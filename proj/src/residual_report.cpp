#include "eulerform/residual_report.hpp"

#include <cmath>
#include <cstdio>
#include <map>

#include "eulerform/errors.hpp"

namespace eulerform {

ConvergenceThresholds default_thresholds(int stencil_order) {
  ConvergenceThresholds t;
  t.min_order = stencil_order == 2 ? 1.8 : 3.5;
  return t;
}

std::vector<ResidualRow> measure_residuals(const SystemResiduals& res, const Grid& grid,
                                           double dt) {
  std::vector<ResidualRow> rows;
  for (Equation eq : kAllEquations) {
    ResidualRow row;
    row.equation = std::string(equation_name(eq));
    row.n = grid.n;
    row.dt = dt;
    double l2_sq = 0.0;
    for (const ScalarField* f : res.components(eq)) {
      row.sup_norm = std::max(row.sup_norm, sup_norm(*f));
      const double l2 = l2_norm(*f);
      l2_sq += l2 * l2;
    }
    row.l2_norm = std::sqrt(l2_sq);
    rows.push_back(std::move(row));
  }
  return rows;
}

bool ResidualReport::pass() const {
  for (const auto& r : rows)
    if (!r.pass) return false;
  return true;
}

std::string format_real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

ResidualReport assemble_report(const std::vector<std::vector<ResidualRow>>& per_resolution,
                               const ConvergenceThresholds& thresholds) {
  if (per_resolution.empty()) throw UsageError("residual report needs at least one resolution");
  const std::size_t neq = per_resolution.front().size();
  for (const auto& r : per_resolution)
    if (r.size() != neq) throw UsageError("resolutions report different equation sets");

  ResidualReport report;
  report.thresholds = thresholds;
  report.resolutions = static_cast<int>(per_resolution.size());
  const bool with_orders = per_resolution.size() >= 3;

  for (std::size_t e = 0; e < neq; ++e) {
    std::vector<ResidualRow> group;
    for (const auto& res : per_resolution) group.push_back(res[e]);

    bool all_zero = true, all_exact = true, all_finite = true;
    for (const auto& r : group) {
      all_zero = all_zero && r.sup_norm == 0.0 && r.l2_norm == 0.0;
      all_exact = all_exact && r.sup_norm <= thresholds.exact_tol;
      all_finite = all_finite && std::isfinite(r.sup_norm) && std::isfinite(r.l2_norm);
    }

    bool verdict = all_finite;
    std::string label;
    if (all_zero) {
      label = "identically_zero";
      verdict = true;
    } else if (all_exact) {
      label = "exact";
      verdict = true;
    } else if (with_orders) {
      for (std::size_t i = 1; i < group.size(); ++i) {
        const double ratio = static_cast<double>(group[i].n) / group[i - 1].n;
        const double p = std::log(group[i - 1].sup_norm / group[i].sup_norm) / std::log(ratio);
        group[i].order = p;
        group[i].order_label = format_real(p);
        verdict = verdict && std::isfinite(p) && p >= thresholds.min_order;
      }
    }
    for (auto& r : group) {
      if (!label.empty()) r.order_label = label;
      r.pass = verdict;
      report.rows.push_back(std::move(r));
    }
  }
  return report;
}

std::string residual_csv(const ResidualReport& report) {
  std::string out = "equation,n,dt,sup_norm,l2_norm,order_vs_prev,pass\n";
  for (const auto& r : report.rows) {
    out += r.equation + "," + std::to_string(r.n) + "," + format_real(r.dt) + "," +
           format_real(r.sup_norm) + "," + format_real(r.l2_norm) + "," + r.order_label + "," +
           (r.pass ? "true" : "false") + "\n";
  }
  return out;
}

nlohmann::ordered_json residual_json(const ResidualReport& report) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& r : report.rows) {
    nlohmann::ordered_json j;
    j["equation"] = r.equation;
    j["n"] = r.n;
    j["dt"] = r.dt;
    j["sup_norm"] = r.sup_norm;
    j["l2_norm"] = r.l2_norm;
    if (r.order)
      j["order_vs_prev"] = *r.order;
    else if (!r.order_label.empty())
      j["order_vs_prev"] = r.order_label;
    else
      j["order_vs_prev"] = nullptr;
    j["pass"] = r.pass;
    rows.push_back(std::move(j));
  }
  return rows;
}

}  // namespace eulerform
