#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "eulerform/reformulation.hpp"

namespace eulerform {

struct ResidualRow {
  std::string equation;
  int n = 0;
  double dt = 0.0;
  double sup_norm = 0.0;
  double l2_norm = 0.0;
  std::optional<double> order;  // vs the previous resolution
  /// Text of the order_vs_prev column: a number, "exact", "identically_zero"
  /// or empty.
  std::string order_label;
  bool pass = false;
};

struct ConvergenceThresholds {
  double min_order = 3.5;
  /// Residuals at or below this at every resolution are labelled "exact".
  double exact_tol = 1e-12;
};

/// 3.5 for fourth-order stencils, 1.8 for second-order.
ConvergenceThresholds default_thresholds(int stencil_order);

/// Norms of every equation at one resolution; order fields left empty. For a
/// vector equation sup is over components and l2 combines them.
std::vector<ResidualRow> measure_residuals(const SystemResiduals& res, const Grid& grid,
                                           double dt);

struct ResidualReport {
  std::vector<ResidualRow> rows;  // grouped by equation, increasing n
  ConvergenceThresholds thresholds;
  int resolutions = 0;
  bool pass() const;
};

/// Combines per-resolution rows (outer index: resolution, increasing n).
/// Orders are filled only when at least three resolutions are present.
/// Verdicts per equation:
///   every row bitwise zero            -> "identically_zero", pass
///   every sup_norm <= exact_tol       -> "exact", pass
///   >= 3 resolutions                  -> pass iff every order >= min_order
///   fewer resolutions                 -> pass iff every norm is finite
ResidualReport assemble_report(const std::vector<std::vector<ResidualRow>>& per_resolution,
                               const ConvergenceThresholds& thresholds);

/// %.17g formatting used by every report.
std::string format_real(double x);

/// `equation,n,dt,sup_norm,l2_norm,order_vs_prev,pass`
std::string residual_csv(const ResidualReport& report);
nlohmann::ordered_json residual_json(const ResidualReport& report);

}  // namespace eulerform
