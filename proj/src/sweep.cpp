#include "helixwake/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "helixwake/parallel.hpp"

namespace helixwake {

namespace {

std::vector<double> linspace(double lo, double hi, int n) {
  if (n == 1) return {lo};
  std::vector<double> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[i] = lo + (hi - lo) * i / (n - 1);
  return v;
}

void check_grid(double lo, double hi, int n, const char* name) {
  if (n < 1) throw std::invalid_argument(std::string(name) + " grid needs at least one point");
  if (!std::isfinite(lo) || !std::isfinite(hi)) throw std::invalid_argument(std::string(name) + " grid bounds must be finite");
  if (lo > hi) throw std::invalid_argument(std::string(name) + " grid min exceeds max");
  if (n > 1 && !(lo < hi)) throw std::invalid_argument(std::string(name) + " grid needs min < max");
}

double mean_power(const TurbineTimeSeries& s) {
  double acc = 0.0;
  for (const auto& x : s.samples) acc += x.power;
  return acc / static_cast<double>(s.samples.size());
}

}  // namespace

std::string_view to_string(SweepObjective objective) {
  switch (objective) {
    case SweepObjective::Energy3D: return "energy@3D";
    case SweepObjective::Energy5D: return "energy@5D";
    case SweepObjective::Energy7D: return "energy@7D";
    case SweepObjective::EnergyMinusPowerLoss: return "energy-power-penalty";
  }
  return "?";
}

std::optional<SweepObjective> parse_objective(std::string_view token) {
  for (auto o : {SweepObjective::Energy3D, SweepObjective::Energy5D, SweepObjective::Energy7D,
                 SweepObjective::EnergyMinusPowerLoss}) {
    if (to_string(o) == token) return o;
  }
  return std::nullopt;
}

void SweepSpec::validate() const {
  check_grid(st_min, st_max, st_count, "St");
  check_grid(amp_min, amp_max, amp_count, "amplitude");
  if (!(st_min > 0.0)) throw std::invalid_argument("St grid must be positive");
  if (amp_min < 0.0) throw std::invalid_argument("amplitude grid must be >= 0");
  if (!(penalty_weight >= 0.0)) throw std::invalid_argument("penalty weight must be >= 0");
  if (!(settle_periods >= 0.0) || !(average_periods >= 10.0)) {
    throw std::invalid_argument("sweep needs settle_periods >= 0 and average_periods >= 10");
  }
}

std::vector<double> SweepSpec::st_values() const { return linspace(st_min, st_max, st_count); }
std::vector<double> SweepSpec::amplitude_values() const { return linspace(amp_min, amp_max, amp_count); }

SweepPoint evaluate_point(const SweepSpec& spec, const RunResult& run, const RunResult& baseline) {
  SweepPoint p;
  p.strouhal = run.strategy.excitation.strouhal;
  p.amplitude = run.strategy.excitation.amplitude_deg;
  auto gain = [&](std::size_t plane) {
    return 100.0 * (run.mean_energy[plane] - baseline.mean_energy[plane]) / baseline.mean_energy[plane];
  };
  const double base_power = mean_power(baseline.series);
  p.power_delta_pct = 100.0 * (mean_power(run.series) - base_power) / base_power;
  switch (spec.objective) {
    case SweepObjective::Energy3D:
      p.energy_delta_pct = gain(0);
      p.objective = p.energy_delta_pct;
      break;
    case SweepObjective::Energy5D:
      p.energy_delta_pct = gain(1);
      p.objective = p.energy_delta_pct;
      break;
    case SweepObjective::Energy7D:
      p.energy_delta_pct = gain(2);
      p.objective = p.energy_delta_pct;
      break;
    case SweepObjective::EnergyMinusPowerLoss:
      p.energy_delta_pct = gain(1);
      p.objective = p.energy_delta_pct - spec.penalty_weight * std::max(0.0, -p.power_delta_pct);
      break;
  }
  return p;
}

SweepResult run_sweep(const SweepSpec& spec, const ScenarioConfig& base, unsigned threads) {
  spec.validate();

  auto configure = [&](StrategyKind kind, double st, double amp) {
    ScenarioConfig cfg = base;
    cfg.strategy.kind = kind;
    cfg.strategy.excitation.strouhal = st;
    cfg.strategy.excitation.amplitude_deg = amp;
    cfg.settle_periods = spec.settle_periods;
    cfg.average_periods = spec.average_periods;
    cfg.duration = 0.0;
    return cfg;
  };

  // each St gets a baseline over the same averaging window as its excited runs
  const auto st_values = spec.st_values();
  std::vector<RunResult> baselines(st_values.size());
  parallel_for(st_values.size(), threads, [&](std::size_t i) {
    baselines[i] = run_scenario(configure(StrategyKind::Baseline, st_values[i], 0.0));
  });

  struct Job {
    std::size_t st_index;
    double amp;
  };
  std::vector<Job> jobs;
  for (double a : spec.amplitude_values()) {
    for (std::size_t i = 0; i < st_values.size(); ++i) jobs.push_back({i, a});
  }

  std::vector<SweepPoint> points(jobs.size());
  parallel_for(jobs.size(), threads, [&](std::size_t i) {
    const double st = st_values[jobs[i].st_index];
    try {
      points[i] = evaluate_point(spec, run_scenario(configure(spec.kind, st, jobs[i].amp)),
                                 baselines[jobs[i].st_index]);
    } catch (const std::exception& e) {
      points[i].strouhal = st;
      points[i].amplitude = jobs[i].amp;
      points[i].ok = false;
      points[i].error = e.what();
    }
  });

  SweepResult result;
  for (auto& p : points) (p.ok ? result.ranked : result.failed).push_back(p);
  std::stable_sort(result.ranked.begin(), result.ranked.end(), [](const auto& l, const auto& r) {
    if (l.objective != r.objective) return l.objective > r.objective;
    if (l.amplitude != r.amplitude) return l.amplitude < r.amplitude;
    return l.strouhal < r.strouhal;
  });
  return result;
}

void write_sweep_csv(std::ostream& os, const SweepSpec& spec, const SweepResult& result,
                     const std::string& header_comment) {
  if (!header_comment.empty()) os << header_comment;
  char buf[256];
  os << "# sweep strategy=" << to_string(spec.kind) << " objective=" << to_string(spec.objective) << '\n';
  std::snprintf(buf, sizeof buf, "# st_min=%.17g st_max=%.17g st_count=%d\n", spec.st_min, spec.st_max, spec.st_count);
  os << buf;
  std::snprintf(buf, sizeof buf, "# amp_min=%.17g amp_max=%.17g amp_count=%d\n", spec.amp_min, spec.amp_max, spec.amp_count);
  os << buf;
  std::snprintf(buf, sizeof buf, "# penalty_weight=%.17g settle_periods=%.17g average_periods=%.17g\n",
                spec.penalty_weight, spec.settle_periods, spec.average_periods);
  os << buf;
  os << "rank,strouhal,amplitude_deg,objective,power_delta_pct,energy_delta_pct,status\n";
  int rank = 1;
  for (const auto& p : result.ranked) {
    std::snprintf(buf, sizeof buf, "%d,%.17g,%.17g,%.17g,%.17g,%.17g,ok\n", rank++, p.strouhal,
                  p.amplitude, p.objective + 0.0, p.power_delta_pct + 0.0, p.energy_delta_pct + 0.0);
    os << buf;
  }
  for (const auto& p : result.failed) {
    std::string msg = p.error;
    std::replace(msg.begin(), msg.end(), ',', ';');
    std::replace(msg.begin(), msg.end(), '\n', ' ');
    std::snprintf(buf, sizeof buf, ",%.17g,%.17g,,,,failed: ", p.strouhal, p.amplitude);
    os << buf << msg << '\n';
  }
}

}  // namespace helixwake
