#include <cstdio>
#include <fstream>
#include <numbers>

#include "ringecho/errors.hpp"
#include "ringecho/scenario.hpp"
#include "ringecho/units.hpp"

namespace ringecho {

namespace {

std::string tag(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", v);
  std::string s = buf;
  for (auto& c : s) {
    if (c == '.') c = 'p';
  }
  return s;
}

Scenario comb_base() {
  Scenario s;
  s.count = 61;
  s.spacing = 0.1;
  s.input.shape = PulseSpec::Shape::gaussian;
  s.grid.echoes_to_cover = 4;
  s.echo_count = 3;
  return s;
}

// Three-pulse trace reproduction: weak-to-strong coupling at finesse 50.
std::vector<std::filesystem::path> builtin_pulse_train(
    const std::filesystem::path& dir, int workers) {
  (void)workers;
  std::vector<std::filesystem::path> out;
  for (const double k : {0.01, 0.025, 0.05}) {
    Scenario s = comb_base();
    s.finesse = 50.0;
    s.coupling = k;
    s.input.shape = PulseSpec::Shape::multi_gaussian;
    s.input.spacing = 8.0;
    s.grid.pre_time = 24.0;
    s.name = "kappa_" + tag(k);
    auto files = run_scenario(s, dir).files;
    out.insert(out.end(), files.begin(), files.end());
  }
  return out;
}

// Retrieval efficiency against finesse for three couplings.
std::vector<std::filesystem::path> builtin_efficiency_sweep(
    const std::filesystem::path& dir, int workers) {
  SweepRequest request;
  request.base = comb_base();
  request.base.name = "eta_vs_finesse";
  request.base.grid.echoes_to_cover = 2;
  request.base.echo_count = 1;
  request.axes.push_back({"kappa", {0.01, 0.025, 0.05}});
  request.axes.push_back({"finesse", {3, 5, 10, 20, 50, 100, 200, 500}});
  return {run_sweep(request, dir, workers)};
}

// Equal-frequency delay line at strong coupling.
std::vector<std::filesystem::path> builtin_equal_frequency(
    const std::filesystem::path& dir, int workers) {
  (void)workers;
  std::vector<std::filesystem::path> out;
  for (const double k : {5.0, 7.5, 10.0, 15.0}) {
    Scenario s;
    s.count = 61;
    s.spacing = 0.0;
    s.coupling = k;
    s.loss = 1e-4;
    s.grid.duration = 192.0;
    s.grid.bandwidth_factor = 16.0;
    s.echo_count = 0;
    s.name = "kappa_" + tag(k);
    auto files = run_scenario(s, dir).files;
    out.insert(out.end(), files.begin(), files.end());
  }
  return out;
}

// Echo traces against coupling at finesse 500.
std::vector<std::filesystem::path> builtin_coupling_scan(
    const std::filesystem::path& dir, int workers) {
  (void)workers;
  std::vector<std::filesystem::path> out;
  for (const double k : {0.035, 0.05, 0.1, 0.3}) {
    Scenario s = comb_base();
    s.loss = 1e-4;
    s.coupling = k;
    s.grid.echoes_to_cover = 2;
    s.output.occupations = false;  // 2^22-sample grids; traces only
    s.name = "kappa_" + tag(k);
    auto files = run_scenario(s, dir).files;
    out.insert(out.end(), files.begin(), files.end());
  }
  return out;
}

// On-demand retrieval: equalize the comb for one echo period and release.
std::vector<std::filesystem::path> builtin_freeze(
    const std::filesystem::path& dir, int workers) {
  (void)workers;
  Scenario s = comb_base();
  s.name = "hold_one_period";
  s.finesse = 50.0;
  s.coupling = 0.05;
  s.engine = EngineMode::ode;
  const double period = 2.0 * std::numbers::pi / s.spacing;
  s.schedule.enabled = true;
  s.schedule.t_on = 15.0;
  s.schedule.t_off = 15.0 + period;
  s.schedule.ramp = 0.0;
  s.grid.duration = 480.0;
  s.echo_count = 2;
  return run_scenario(s, dir).files;
}

std::vector<std::filesystem::path> builtin_table(
    const std::filesystem::path& dir, bool low_finesse) {
  const auto rows =
      low_finesse ? delay_table_rows_low_finesse() : delay_table_rows_schemes();
  const auto entries = table_delays(rows);
  std::filesystem::create_directories(dir);
  const std::filesystem::path path = dir / "delays.csv";
  const std::string csv = delay_table_csv(entries);
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    f.write(csv.data(), static_cast<std::streamsize>(csv.size()));
  }
  std::filesystem::rename(tmp, path);
  return {path};
}

}  // namespace

std::vector<std::string> builtin_names() {
  return {"fig2", "fig3", "fig4", "fig5", "freeze", "table1", "table2"};
}

std::vector<std::filesystem::path> run_builtin(
    const std::string& name, const std::filesystem::path& out_dir,
    int workers) {
  const std::filesystem::path dir = out_dir / name;
  if (name == "fig2") return builtin_pulse_train(dir, workers);
  if (name == "fig3") return builtin_efficiency_sweep(dir, workers);
  if (name == "fig4") return builtin_equal_frequency(dir, workers);
  if (name == "fig5") return builtin_coupling_scan(dir, workers);
  if (name == "freeze") return builtin_freeze(dir, workers);
  if (name == "table1") return builtin_table(dir, false);
  if (name == "table2") return builtin_table(dir, true);
  throw ValidationError("unknown builtin '" + name + "'");
}

}  // namespace ringecho
