#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "ringecho/dynamics.hpp"
#include "ringecho/grid.hpp"
#include "ringecho/metrics.hpp"
#include "ringecho/pulse.hpp"

namespace ringecho {

enum class EngineMode { spectral, ode, both };

// Scenario parameters use the quoted conventions of the config format (see
// the README): `coupling` is the external half-linewidth each cavity adds to
// its resonance, `loss` is the intrinsic intensity decay rate, and `finesse`
// is comb spacing over `loss`... all per unit input spectral width. resolve()
// derives the internal field rates from these.

struct ScenarioInput {
  PulseSpec::Shape shape = PulseSpec::Shape::gaussian;
  double spectral_width = 1.0;
  double spacing = 8.0;            ///< three-component spacing when offsets empty
  std::vector<double> amplitudes;  ///< defaults to {1,1,1} for multi_gaussian
  std::vector<double> offsets;     ///< explicit component offsets
  double center = 0.0;
};

struct ScenarioSchedule {
  bool enabled = false;
  double t_on = 0.0;
  double t_off = 0.0;
  double ramp = 0.0;
};

struct ScenarioGridSpec {
  double bandwidth_factor = 4.0;
  int echoes_to_cover = 4;
  double pre_time = 16.0;
  double post_time = 16.0;
  double duration = 0.0;  ///< explicit window; required when spacing == 0
  std::size_t max_samples = std::size_t{1} << 26;
};

struct ScenarioOutput {
  std::size_t trace_points = 4000;  ///< decimation target for trace files
  bool occupations = true;
};

struct Scenario {
  std::string name = "scenario";

  int count = 61;
  double spacing = 0.1;   ///< comb spacing / input width; 0 = equal frequencies
  double coupling = 0.05; ///< external half-linewidth / input width
  double finesse = 0.0;   ///< spacing / loss; takes precedence when > 0
  double loss = 0.0;      ///< intensity decay rate / input width
  bool centered = true;
  double propagation_delay = 0.0;
  std::string ordering = "natural";  ///< natural | reversed | shuffled:<seed>

  ScenarioInput input;
  EngineMode engine = EngineMode::spectral;
  ScenarioSchedule schedule;
  ScenarioGridSpec grid;
  int echo_count = 3;
  ScenarioOutput output;
};

struct ResolvedScenario {
  ArraySpec array;  ///< internal field rates
  TimeGrid grid;
  SampledSignal input;
  bool input_overlap_warning = false;
  double model_coupling = 0.0;
  double model_linewidth = 0.0;
  double quoted_loss = 0.0;
  FrequencySchedule schedule;
  bool scheduled = false;
};

struct SweepAxis {
  std::string key;  ///< coupling | finesse | loss | spacing | count
  std::vector<double> values;
};

struct SweepRequest {
  Scenario base;
  std::vector<SweepAxis> axes;  ///< cartesian product, row-major as listed
  bool allow_large = false;     ///< required beyond 10^4 cells
};

/// Parses the line-oriented `key = value` format with [sections]; unknown or
/// malformed keys raise ValidationError naming the offending key.
SweepRequest parse_config(const std::string& text);
SweepRequest load_config(const std::filesystem::path& file);

/// Dry-run resolution: array, grid and input construction with all
/// validation, no execution or I/O.
ResolvedScenario resolve(const Scenario& s);

struct RunResult {
  EchoReport report;              ///< empty echoes for equal-frequency arrays
  double delay = 0.0;             ///< centroid delay over the dominant window
  double window_efficiency = 0.0; ///< first-echo or dominant-window energy fraction
  double first_fidelity = 0.0;
  double wraparound_fraction = 0.0;
  bool wraparound_ok = true;
  double engine_disagreement = -1.0;  ///< relative L2, when engine == both
  std::vector<std::filesystem::path> files;
};

/// Runs one scenario and writes trace.csv, occupations.csv, metrics.csv and
/// manifest.txt under out_dir/<name>/. Files are written atomically and
/// reruns of the same scenario are byte-identical.
RunResult run_scenario(const Scenario& s, const std::filesystem::path& out_dir);

/// Cartesian sweep; one aggregated CSV row per cell, deterministic row order,
/// cells executed by `workers` threads. Returns the CSV path.
std::filesystem::path run_sweep(const SweepRequest& request,
                                const std::filesystem::path& out_dir,
                                int workers = 1);

std::vector<std::string> builtin_names();

/// Runs a named builtin (figure reproduction or delay table) under
/// out_dir/<name>/ and returns the written files.
std::vector<std::filesystem::path> run_builtin(const std::string& name,
                                               const std::filesystem::path& out_dir,
                                               int workers = 1);

}  // namespace ringecho
