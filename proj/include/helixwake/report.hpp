#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "helixwake/simulation.hpp"

namespace helixwake {

/// One report row; every delta is relative to the baseline run, in percent.
struct MetricsRow {
  StrategyKind kind = StrategyKind::Baseline;
  double energy_3d = 0.0;
  double energy_5d = 0.0;
  double energy_7d = 0.0;
  double power_mean = 0.0;
  double power_variance = 0.0;
  double thrust_mean = 0.0;
  double thrust_variance = 0.0;
  double moment_mean = 0.0;  // blade-1 flapwise root moment
  double moment_variance = 0.0;
  double pitch_activity = 0.0;  // deg/s, absolute

  friend bool operator==(const MetricsRow&, const MetricsRow&) = default;
};

struct MetricsReport {
  std::vector<MetricsRow> rows;  // baseline first, then kAllStrategies order

  const MetricsRow* find(StrategyKind kind) const;
  friend bool operator==(const MetricsReport&, const MetricsReport&) = default;
};

inline constexpr int kReportMetricColumns = 10;

/// Requires a baseline run; all runs must share flow, turbine and sampling.
MetricsReport build_report(const std::map<StrategyKind, RunResult>& runs);

/// Columns: strategy followed by the ten metrics. Values are printed with
/// round-trip precision.
void write_report_csv(std::ostream& os, const MetricsReport& report,
                      const std::string& header_comment = {});
/// Inverse of write_report_csv; '#' lines are skipped.
MetricsReport parse_report_csv(std::istream& is);

/// Metrics as rows and strategies as columns, like the published tables.
std::string format_report_table(const MetricsReport& report);

}  // namespace helixwake
