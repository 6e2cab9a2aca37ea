#include "helixwake/report.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace helixwake {

namespace {

struct Column {
  const char* csv;
  const char* label;
  double MetricsRow::*field;
  const char* unit;
};

constexpr std::array<Column, kReportMetricColumns> kColumns{{
    {"energy_3d_pct", "Energy at 3D", &MetricsRow::energy_3d, "%"},
    {"energy_5d_pct", "Energy at 5D", &MetricsRow::energy_5d, "%"},
    {"energy_7d_pct", "Energy at 7D", &MetricsRow::energy_7d, "%"},
    {"power_mean_pct", "Power capture", &MetricsRow::power_mean, "%"},
    {"power_variance_pct", "Variance of power", &MetricsRow::power_variance, "%"},
    {"thrust_mean_pct", "Thrust force", &MetricsRow::thrust_mean, "%"},
    {"thrust_variance_pct", "Variance of thrust", &MetricsRow::thrust_variance, "%"},
    {"moment_mean_pct", "Moment on blades (flapwise, blade 1)", &MetricsRow::moment_mean, "%"},
    {"moment_variance_pct", "Variance of moment", &MetricsRow::moment_variance, "%"},
    {"pitch_activity_deg_s", "Pitch activity [deg/s]", &MetricsRow::pitch_activity, ""},
}};

double pct_change(double value, double reference) {
  return reference != 0.0 ? 100.0 * (value - reference) / reference : 0.0;
}

}  // namespace

const MetricsRow* MetricsReport::find(StrategyKind kind) const {
  for (const auto& r : rows) {
    if (r.kind == kind) return &r;
  }
  return nullptr;
}

MetricsReport build_report(const std::map<StrategyKind, RunResult>& runs) {
  const auto base_it = runs.find(StrategyKind::Baseline);
  if (base_it == runs.end()) throw std::invalid_argument("build_report: baseline run missing");
  const RunResult& base = base_it->second;

  MetricsReport report;
  for (StrategyKind kind : kAllStrategies) {
    const auto it = runs.find(kind);
    if (it == runs.end()) continue;
    MetricsRow row;
    row.kind = kind;
    if (kind != StrategyKind::Baseline) {
      const RunResult& run = it->second;
      row.energy_3d = pct_change(run.mean_energy[0], base.mean_energy[0]);
      row.energy_5d = pct_change(run.mean_energy[1], base.mean_energy[1]);
      row.energy_7d = pct_change(run.mean_energy[2], base.mean_energy[2]);
      const auto stats = series_stats(run.series, base.series, run.timing.advection_time);
      row.power_mean = stats.power.mean_pct;
      row.power_variance = stats.power.variance_pct;
      row.thrust_mean = stats.thrust.mean_pct;
      row.thrust_variance = stats.thrust.variance_pct;
      row.moment_mean = stats.moment.mean_pct;
      row.moment_variance = stats.moment.variance_pct;
      row.pitch_activity = pitch_activity(run.series, run.timing.excitation_frequency);
    }
    report.rows.push_back(row);
  }
  return report;
}

void write_report_csv(std::ostream& os, const MetricsReport& report,
                      const std::string& header_comment) {
  if (!header_comment.empty()) os << header_comment;
  os << "strategy";
  for (const auto& c : kColumns) os << ',' << c.csv;
  os << '\n';
  char buf[64];
  for (const auto& row : report.rows) {
    os << to_string(row.kind);
    for (const auto& c : kColumns) {
      // %.17g round-trips a double exactly
      std::snprintf(buf, sizeof buf, ",%.17g", row.*(c.field) + 0.0);
      os << buf;
    }
    os << '\n';
  }
}

MetricsReport parse_report_csv(std::istream& is) {
  MetricsReport report;
  std::string line;
  bool header_seen = false;
  while (std::getline(is, line)) {
    if (line.empty() || line.front() == '#') continue;
    if (!header_seen) {
      header_seen = true;
      continue;
    }
    std::stringstream ss(line);
    std::string cell;
    std::getline(ss, cell, ',');
    const auto kind = parse_strategy(cell);
    if (!kind) throw std::runtime_error("report csv: unknown strategy '" + cell + "'");
    MetricsRow row;
    row.kind = *kind;
    for (const auto& c : kColumns) {
      if (!std::getline(ss, cell, ',')) throw std::runtime_error("report csv: short row");
      row.*(c.field) = std::stod(cell);
    }
    report.rows.push_back(row);
  }
  return report;
}

std::string format_report_table(const MetricsReport& report) {
  std::ostringstream os;
  char buf[128];
  std::snprintf(buf, sizeof buf, "%-38s", "");
  os << buf;
  for (const auto& row : report.rows) {
    std::snprintf(buf, sizeof buf, "%12s", std::string(display_name(row.kind)).c_str());
    os << buf;
  }
  os << '\n';
  for (const auto& c : kColumns) {
    std::snprintf(buf, sizeof buf, "%-38s", c.label);
    os << buf;
    for (const auto& row : report.rows) {
      const double v = row.*(c.field) + 0.0;
      if (c.unit[0] == '%') {
        std::snprintf(buf, sizeof buf, "%+11.1f%%", v);
      } else {
        std::snprintf(buf, sizeof buf, "%12.2f", v);
      }
      os << buf;
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace helixwake
