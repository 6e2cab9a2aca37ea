#include <gtest/gtest.h>

#include <sstream>

#include "helixwake/report.hpp"

using namespace helixwake;

namespace {

ScenarioConfig scenario(StrategyKind kind) {
  ScenarioConfig cfg;
  cfg.strategy.kind = kind;
  return cfg;
}

// One simulation per strategy shared by every test in this file.
const std::map<StrategyKind, RunResult>& runs() {
  static const auto all = [] {
    std::map<StrategyKind, RunResult> m;
    for (auto k : {StrategyKind::Baseline, StrategyKind::YawDIPC, StrategyKind::TiltDIPC,
                   StrategyKind::HelixCCW, StrategyKind::DIC, StrategyKind::SIC}) {
      m.emplace(k, run_scenario(scenario(k)));
    }
    return m;
  }();
  return all;
}

}  // namespace

TEST(BuildReport, BaselineOnlyIsOneZeroRow) {
  const auto report = build_report({{StrategyKind::Baseline, runs().at(StrategyKind::Baseline)}});
  ASSERT_EQ(report.rows.size(), 1u);
  EXPECT_EQ(report.rows[0], MetricsRow{});
}

TEST(BuildReport, RequiresBaseline) {
  EXPECT_THROW(build_report({{StrategyKind::TiltDIPC, runs().at(StrategyKind::TiltDIPC)}}), std::invalid_argument);
}

TEST(BuildReport, DipcEnergyOrderingAtAllPlanes) {
  const auto report = build_report(runs());
  const auto* helix = report.find(StrategyKind::HelixCCW);
  const auto* tilt = report.find(StrategyKind::TiltDIPC);
  const auto* yaw = report.find(StrategyKind::YawDIPC);
  ASSERT_TRUE(helix && tilt && yaw);
  EXPECT_GT(helix->energy_3d, tilt->energy_3d);
  EXPECT_GT(tilt->energy_3d, yaw->energy_3d);
  EXPECT_GT(yaw->energy_3d, 0.0);
  EXPECT_GT(helix->energy_5d, tilt->energy_5d);
  EXPECT_GT(tilt->energy_5d, yaw->energy_5d);
  EXPECT_GT(yaw->energy_5d, 0.0);
  EXPECT_GT(helix->energy_7d, tilt->energy_7d);
  EXPECT_GT(tilt->energy_7d, yaw->energy_7d);
  EXPECT_GT(yaw->energy_7d, 0.0);
}

TEST(BuildReport, RowOrderAndShape) {
  const auto report = build_report(runs());
  ASSERT_EQ(report.rows.size(), 6u);
  EXPECT_EQ(report.rows[0].kind, StrategyKind::Baseline);
  EXPECT_EQ(report.rows[1].kind, StrategyKind::YawDIPC);
  EXPECT_EQ(report.rows[5].kind, StrategyKind::SIC);
}

TEST(ReportCsv, RoundTripIsExact) {
  const auto report = build_report(runs());
  std::ostringstream os;
  write_report_csv(os, report, "# provenance\n");
  std::istringstream is(os.str());
  EXPECT_EQ(parse_report_csv(is), report);

  std::istringstream again(os.str());
  std::string line;
  std::getline(again, line);
  EXPECT_EQ(line, "# provenance");
  std::getline(again, line);
  EXPECT_EQ(std::count(line.begin(), line.end(), ','), kReportMetricColumns);
}

TEST(ReportTable, MetricRowsAndStrategyColumns) {
  const auto text = format_report_table(build_report(runs()));
  std::istringstream is(text);
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(is, line)) lines.push_back(line);
  ASSERT_EQ(lines.size(), 1u + kReportMetricColumns);
  EXPECT_NE(lines[0].find("CCW Helix"), std::string::npos);
  EXPECT_NE(lines[0].find("SIC"), std::string::npos);
  EXPECT_NE(lines.back().find("Pitch activity"), std::string::npos);
}
