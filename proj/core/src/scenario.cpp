#include "ringecho/scenario.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <numbers>
#include <random>
#include <sstream>
#include <thread>

#include "ringecho/errors.hpp"
#include "ringecho/propagation.hpp"
#include "ringecho/version.hpp"

namespace ringecho {

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string trim(std::string s) {
  const auto is_space = [](unsigned char c) { return std::isspace(c) != 0; };
  while (!s.empty() && is_space(s.front())) s.erase(s.begin());
  while (!s.empty() && is_space(s.back())) s.pop_back();
  return s;
}

double parse_number(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const double v = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw ValidationError("key '" + key + "': expected a number, got '" +
                          value + "'");
  }
}

long parse_integer(const std::string& key, const std::string& value) {
  const double v = parse_number(key, value);
  if (v != std::floor(v)) {
    throw ValidationError("key '" + key + "': expected an integer");
  }
  return static_cast<long>(v);
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "yes" || value == "1") return true;
  if (value == "false" || value == "no" || value == "0") return false;
  throw ValidationError("key '" + key + "': expected true/false");
}

std::vector<double> parse_list(const std::string& key,
                               const std::string& value) {
  std::vector<double> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) {
      throw ValidationError("key '" + key + "': empty list element");
    }
    out.push_back(parse_number(key, item));
  }
  if (out.empty()) throw ValidationError("key '" + key + "': empty list");
  return out;
}

void atomic_write(const std::filesystem::path& path, const std::string& data) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open " + tmp.string());
    f.write(data.data(), static_cast<std::streamsize>(data.size()));
    if (!f) throw std::runtime_error("write failed: " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

void run_parallel(std::size_t cells, int workers,
                  const std::function<void(std::size_t)>& fn) {
  if (workers <= 1 || cells <= 1) {
    for (std::size_t i = 0; i < cells; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr first_error;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= cells) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> threads;
  const int n = std::min<int>(workers, static_cast<int>(cells));
  threads.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) threads.emplace_back(worker);
  for (auto& t : threads) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace

SweepRequest parse_config(const std::string& text) {
  SweepRequest request;
  Scenario& s = request.base;
  bool finesse_set = false;
  bool loss_set = false;

  std::string section;
  std::istringstream stream(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(stream, raw)) {
    ++lineno;
    std::string line = raw;
    if (const auto pos = line.find('#'); pos != std::string::npos) {
      line.erase(pos);
    }
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') {
        throw ValidationError("line " + std::to_string(lineno) +
                              ": malformed section header");
      }
      section = trim(line.substr(1, line.size() - 2));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ValidationError("line " + std::to_string(lineno) +
                            ": expected key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    const std::string full = section.empty() ? key : section + "." + key;
    if (key.empty() || value.empty()) {
      throw ValidationError("line " + std::to_string(lineno) +
                            ": empty key or value");
    }

    if (full == "name") {
      s.name = value;
    } else if (full == "array.count") {
      s.count = static_cast<int>(parse_integer(full, value));
    } else if (full == "array.spacing") {
      s.spacing = parse_number(full, value);
    } else if (full == "array.kappa") {
      s.coupling = parse_number(full, value);
    } else if (full == "array.finesse") {
      s.finesse = parse_number(full, value);
      finesse_set = true;
    } else if (full == "array.gamma") {
      s.loss = parse_number(full, value);
      loss_set = true;
    } else if (full == "array.centered") {
      s.centered = parse_bool(full, value);
    } else if (full == "array.ordering") {
      s.ordering = value;
    } else if (full == "array.propagation_delay") {
      s.propagation_delay = parse_number(full, value);
    } else if (full == "input.shape") {
      if (value == "gaussian") {
        s.input.shape = PulseSpec::Shape::gaussian;
      } else if (value == "multi_gaussian") {
        s.input.shape = PulseSpec::Shape::multi_gaussian;
      } else {
        throw ValidationError("key '" + full + "': unknown shape '" + value +
                              "'");
      }
    } else if (full == "input.width") {
      s.input.spectral_width = parse_number(full, value);
    } else if (full == "input.spacing") {
      s.input.spacing = parse_number(full, value);
    } else if (full == "input.amplitudes") {
      s.input.amplitudes = parse_list(full, value);
    } else if (full == "input.offsets") {
      s.input.offsets = parse_list(full, value);
    } else if (full == "input.center") {
      s.input.center = parse_number(full, value);
    } else if (full == "engine.mode") {
      if (value == "spectral") {
        s.engine = EngineMode::spectral;
      } else if (value == "ode") {
        s.engine = EngineMode::ode;
      } else if (value == "both") {
        s.engine = EngineMode::both;
      } else {
        throw ValidationError("key '" + full + "': unknown engine '" + value +
                              "'");
      }
    } else if (full == "schedule.enabled") {
      s.schedule.enabled = parse_bool(full, value);
    } else if (full == "schedule.t_on") {
      s.schedule.t_on = parse_number(full, value);
    } else if (full == "schedule.t_off") {
      s.schedule.t_off = parse_number(full, value);
    } else if (full == "schedule.ramp") {
      s.schedule.ramp = parse_number(full, value);
    } else if (full == "grid.bandwidth_factor") {
      s.grid.bandwidth_factor = parse_number(full, value);
    } else if (full == "grid.echoes") {
      s.grid.echoes_to_cover = static_cast<int>(parse_integer(full, value));
    } else if (full == "grid.pre_time") {
      s.grid.pre_time = parse_number(full, value);
    } else if (full == "grid.post_time") {
      s.grid.post_time = parse_number(full, value);
    } else if (full == "grid.duration") {
      s.grid.duration = parse_number(full, value);
    } else if (full == "grid.max_samples") {
      s.grid.max_samples =
          static_cast<std::size_t>(parse_integer(full, value));
    } else if (full == "metrics.echo_count") {
      s.echo_count = static_cast<int>(parse_integer(full, value));
    } else if (full == "output.trace_points") {
      s.output.trace_points =
          static_cast<std::size_t>(parse_integer(full, value));
    } else if (full == "output.occupations") {
      s.output.occupations = parse_bool(full, value);
    } else if (full == "sweep.allow_large") {
      request.allow_large = parse_bool(full, value);
    } else if (section == "sweep") {
      static const char* kAxes[] = {"kappa", "gamma", "finesse", "spacing",
                                    "count"};
      if (std::find(std::begin(kAxes), std::end(kAxes), key) ==
          std::end(kAxes)) {
        throw ValidationError("key '" + full + "': not a sweepable parameter");
      }
      request.axes.push_back({key, parse_list(full, value)});
    } else {
      throw ValidationError("unknown key '" + full + "'");
    }
  }
  if (finesse_set && loss_set) {
    throw ValidationError(
        "keys 'array.finesse' and 'array.gamma' are mutually exclusive");
  }
  return request;
}

SweepRequest load_config(const std::filesystem::path& file) {
  std::ifstream f(file);
  if (!f) throw ValidationError("cannot open config '" + file.string() + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_config(ss.str());
}

ResolvedScenario resolve(const Scenario& s) {
  if (s.count < 1) throw ValidationError("key 'array.count': must be >= 1");
  if (!(s.spacing >= 0.0) || !std::isfinite(s.spacing)) {
    throw ValidationError("key 'array.spacing': must be finite and >= 0");
  }
  if (!(s.coupling >= 0.0) || !std::isfinite(s.coupling)) {
    throw ValidationError("key 'array.kappa': must be finite and >= 0");
  }
  if (s.finesse < 0.0 || s.loss < 0.0) {
    throw ValidationError("keys 'array.finesse'/'array.gamma': must be >= 0");
  }
  if (s.echo_count < 0) {
    throw ValidationError("key 'metrics.echo_count': must be >= 0");
  }

  double quoted_loss = s.loss;
  if (s.finesse > 0.0) {
    if (s.spacing <= 0.0) {
      throw ValidationError(
          "key 'array.finesse': needs a positive comb spacing");
    }
    quoted_loss = s.spacing / (2.0 * s.finesse);
  }

  ResolvedScenario r;
  r.quoted_loss = quoted_loss;
  // Config values are the external half-linewidth and the intensity decay
  // rate; the model carries field rates.
  r.model_coupling = 2.0 * s.coupling;
  r.model_linewidth = 0.5 * quoted_loss;
  r.array = build_comb_array(s.count, s.spacing, r.model_linewidth,
                             r.model_coupling, s.centered);
  r.array.propagation_delay = s.propagation_delay;

  if (s.ordering == "reversed") {
    std::reverse(r.array.cavities.begin(), r.array.cavities.end());
  } else if (s.ordering.rfind("shuffled:", 0) == 0) {
    const auto seed = parse_integer("array.ordering", s.ordering.substr(9));
    std::mt19937 rng(static_cast<std::mt19937::result_type>(seed));
    std::shuffle(r.array.cavities.begin(), r.array.cavities.end(), rng);
  } else if (s.ordering != "natural") {
    throw ValidationError("key 'array.ordering': unknown ordering '" +
                          s.ordering + "'");
  }
  for (std::size_t i = 0; i < r.array.cavities.size(); ++i) {
    r.array.cavities[i].index = static_cast<int>(i);
  }

  GridBudget budget;
  budget.bandwidth_factor = s.grid.bandwidth_factor;
  budget.echoes_to_cover = s.grid.echoes_to_cover;
  budget.pre_time = s.grid.pre_time;
  budget.post_time = s.grid.post_time;
  budget.explicit_duration = s.grid.duration;
  budget.sample_cap = s.grid.max_samples;
  if (s.spacing <= 0.0 && s.grid.duration <= 0.0) {
    throw ValidationError(
        "key 'grid.duration': required when array.spacing is 0");
  }
  r.grid = make_time_grid(r.array, s.input.spectral_width, budget);

  if (s.engine != EngineMode::spectral) {
    double max_rate = 0.0;
    for (const auto& c : r.array.cavities) {
      max_rate = std::max(
          max_rate, 0.5 * c.coupling + c.linewidth + std::abs(c.detuning));
    }
    if (max_rate > 0.0 && r.grid.step > 0.1 / max_rate) {
      const auto factor = std::bit_ceil(static_cast<std::size_t>(
          std::ceil(r.grid.step * max_rate / 0.1)));
      if (r.grid.count > s.grid.max_samples / factor) {
        throw ResourceError(
            "resolve: time-domain refinement exceeds the sample cap");
      }
      r.grid.step /= static_cast<double>(factor);
      r.grid.count *= factor;
    }
  }

  PulseSpec pulse;
  pulse.shape = s.input.shape;
  pulse.spectral_width = s.input.spectral_width;
  pulse.center = s.input.center;
  if (pulse.shape == PulseSpec::Shape::multi_gaussian) {
    std::vector<double> offsets = s.input.offsets;
    std::vector<double> amplitudes = s.input.amplitudes;
    if (offsets.empty()) {
      offsets = {-s.input.spacing, 0.0, s.input.spacing};
      if (amplitudes.empty()) amplitudes = {1.0, 1.0, 1.0};
    } else if (amplitudes.empty()) {
      amplitudes.assign(offsets.size(), 1.0);
    }
    if (offsets.size() != amplitudes.size()) {
      throw ValidationError(
          "keys 'input.offsets'/'input.amplitudes': size mismatch");
    }
    for (std::size_t i = 0; i < offsets.size(); ++i) {
      pulse.components.push_back({offsets[i], amplitudes[i]});
    }
  }
  MultiPulse built = build_pulse(r.grid, pulse);
  r.input = std::move(built.signal);
  r.input_overlap_warning = built.overlap_warning;

  if (s.schedule.enabled) {
    if (s.engine != EngineMode::ode) {
      throw ValidationError("key 'schedule.enabled': requires engine.mode = ode");
    }
    r.schedule = build_freeze_schedule(r.array, s.schedule.t_on,
                                       s.schedule.t_off, s.schedule.ramp);
    r.scheduled = true;
  }
  return r;
}

namespace {

double rel_l2(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    num += std::norm(a[i] - b[i]);
    den += std::norm(b[i]);
  }
  return den > 0.0 ? std::sqrt(num / den) : std::sqrt(num);
}

struct Execution {
  ResolvedScenario resolved;
  SampledSignal primary;  // output used for metrics
  SampledSignal ode_output;
  std::vector<SampledSignal> ode_amplitudes;
  double disagreement = -1.0;
};

Execution execute(const Scenario& s, bool want_amplitudes) {
  Execution ex;
  ex.resolved = resolve(s);
  const ResolvedScenario& r = ex.resolved;

  if (s.engine == EngineMode::spectral || s.engine == EngineMode::both) {
    ex.primary = propagate(r.array, r.input);
  }
  if (s.engine == EngineMode::ode || s.engine == EngineMode::both) {
    IntegrationResult ode =
        integrate(r.array, r.input, r.scheduled ? &r.schedule : nullptr,
                  want_amplitudes);
    ex.ode_output = std::move(ode.output);
    ex.ode_amplitudes = std::move(ode.amplitudes);
    if (s.engine == EngineMode::both) {
      ex.disagreement = rel_l2(ex.ode_output.samples, ex.primary.samples);
    } else {
      ex.primary = ex.ode_output;
    }
  }
  return ex;
}

RunResult measure(const Scenario& s, const Execution& ex) {
  const ResolvedScenario& r = ex.resolved;
  RunResult result;
  result.engine_disagreement = ex.disagreement;
  result.wraparound_fraction = tail_energy_fraction(ex.primary);
  result.wraparound_ok = result.wraparound_fraction < 1e-6;

  if (s.spacing > 0.0 && s.echo_count > 0) {
    result.report =
        detect_echoes(ex.primary, r.input, s.spacing, s.echo_count);
    if (!result.report.echoes.empty()) {
      result.window_efficiency = result.report.echoes.front().energy_fraction;
      result.first_fidelity = result.report.echoes.front().fidelity;
    }
  } else {
    result.report.total_output_fraction = energy(ex.primary) / energy(r.input);
    if (energy(ex.primary) >= 1e-6) {
      const EchoWindow w = dominant_window(ex.primary);
      result.window_efficiency = efficiency(r.input, ex.primary, w);
      result.first_fidelity = fidelity(r.input, ex.primary, w);
    }
  }
  try {
    result.delay = delay_time(r.input, ex.primary);
  } catch (const ValidationError&) {
    result.delay = std::numeric_limits<double>::quiet_NaN();
  }
  return result;
}

std::string scenario_lines(const Scenario& s, const ResolvedScenario& r) {
  std::string out;
  out += "name = " + s.name + "\n";
  out += "array.count = " + std::to_string(s.count) + "\n";
  out += "array.spacing = " + fmt(s.spacing) + "\n";
  out += "array.kappa = " + fmt(s.coupling) + "\n";
  if (s.finesse > 0.0) out += "array.finesse = " + fmt(s.finesse) + "\n";
  out += "array.gamma = " + fmt(r.quoted_loss) + "\n";
  out += std::string("array.centered = ") + (s.centered ? "true" : "false") +
         "\n";
  out += "array.ordering = " + s.ordering + "\n";
  out += "array.propagation_delay = " + fmt(s.propagation_delay) + "\n";
  out += std::string("input.shape = ") +
         (s.input.shape == PulseSpec::Shape::gaussian ? "gaussian"
                                                      : "multi_gaussian") +
         "\n";
  out += "input.width = " + fmt(s.input.spectral_width) + "\n";
  if (s.input.shape == PulseSpec::Shape::multi_gaussian) {
    out += "input.spacing = " + fmt(s.input.spacing) + "\n";
  }
  out += std::string("engine.mode = ") +
         (s.engine == EngineMode::spectral
              ? "spectral"
              : (s.engine == EngineMode::ode ? "ode" : "both")) +
         "\n";
  if (s.schedule.enabled) {
    out += "schedule.t_on = " + fmt(s.schedule.t_on) + "\n";
    out += "schedule.t_off = " + fmt(s.schedule.t_off) + "\n";
    out += "schedule.ramp = " + fmt(s.schedule.ramp) + "\n";
  }
  return out;
}

std::string manifest_text(const Scenario& s, const Execution& ex,
                          const RunResult& result, std::size_t trace_stride) {
  const ResolvedScenario& r = ex.resolved;
  std::string out;
  out += "format = ringecho-run-manifest 1\n";
  out += std::string("software_version = ") + kVersion + "\n";
  out += scenario_lines(s, r);
  out += "model.coupling = " + fmt(r.model_coupling) + "\n";
  out += "model.linewidth = " + fmt(r.model_linewidth) + "\n";
  out += "model.detuning_first = " + fmt(r.array.cavities.front().detuning) +
         "\n";
  out += "model.detuning_last = " + fmt(r.array.cavities.back().detuning) +
         "\n";
  out += "grid.start = " + fmt(r.grid.start) + "\n";
  out += "grid.step = " + fmt(r.grid.step) + "\n";
  out += "grid.count = " + std::to_string(r.grid.count) + "\n";
  out += "input.energy = " + fmt(energy(r.input)) + "\n";
  out += std::string("input.overlap_warning = ") +
         (r.input_overlap_warning ? "true" : "false") + "\n";
  out += "output.trace_stride = " + std::to_string(trace_stride) + "\n";
  out += "run.wraparound_fraction = " + fmt(result.wraparound_fraction) + "\n";
  out += std::string("run.wraparound_ok = ") +
         (result.wraparound_ok ? "true" : "false") + "\n";
  if (result.engine_disagreement >= 0.0) {
    out += "run.engine_disagreement = " + fmt(result.engine_disagreement) +
           "\n";
  }
  out += "metrics.delay = " + fmt(result.delay) + "\n";
  out += "metrics.window_efficiency = " + fmt(result.window_efficiency) + "\n";
  out += "metrics.first_fidelity = " + fmt(result.first_fidelity) + "\n";
  out += "metrics.transmitted_fraction = " +
         fmt(result.report.transmitted_fraction) + "\n";
  out += "metrics.total_output_fraction = " +
         fmt(result.report.total_output_fraction) + "\n";
  for (std::size_t k = 0; k < result.report.echoes.size(); ++k) {
    const auto& e = result.report.echoes[k];
    const std::string p = "metrics.echo" + std::to_string(k + 1);
    out += p + "_time = " + fmt(e.peak_time) + "\n";
    out += p + "_energy = " + fmt(e.energy_fraction) + "\n";
    out += p + "_fidelity = " + fmt(e.fidelity) + "\n";
  }
  return out;
}

std::string trace_csv(const Execution& ex, std::size_t stride) {
  const SampledSignal& in = ex.resolved.input;
  const SampledSignal& out = ex.primary;
  const bool both = ex.disagreement >= 0.0;
  std::string csv = "t,in_re,in_im,in_abs2,out_re,out_im,out_abs2";
  if (both) csv += ",ode_abs2";
  csv += "\n";
  for (std::size_t j = 0; j < in.samples.size(); j += stride) {
    csv += fmt(in.grid.time(j));
    csv += "," + fmt(in.samples[j].real()) + "," + fmt(in.samples[j].imag()) +
           "," + fmt(std::norm(in.samples[j]));
    csv += "," + fmt(out.samples[j].real()) + "," +
           fmt(out.samples[j].imag()) + "," + fmt(std::norm(out.samples[j]));
    if (both) csv += "," + fmt(std::norm(ex.ode_output.samples[j]));
    csv += "\n";
  }
  return csv;
}

std::string occupations_csv(const Scenario& s, const Execution& ex,
                            std::size_t stride) {
  const ResolvedScenario& r = ex.resolved;
  const std::size_t m = r.grid.count;
  const int n = r.array.count();
  std::vector<std::vector<double>> p(
      static_cast<std::size_t>(n));

  if (s.engine == EngineMode::spectral || s.engine == EngineMode::both) {
    for_each_cavity_amplitude(
        r.array, r.input, [&](int idx, const SampledSignal& b) {
          auto& row = p[static_cast<std::size_t>(idx)];
          row.reserve(m / stride + 1);
          for (std::size_t j = 0; j < m; j += stride) {
            row.push_back(std::norm(b.samples[j]));
          }
        });
  } else {
    for (int idx = 0; idx < n; ++idx) {
      const auto& b = ex.ode_amplitudes[static_cast<std::size_t>(idx)];
      auto& row = p[static_cast<std::size_t>(idx)];
      row.reserve(m / stride + 1);
      for (std::size_t j = 0; j < m; j += stride) {
        row.push_back(std::norm(b.samples[j]));
      }
    }
  }

  std::string csv = "t,p_total";
  for (int i = 1; i <= n; ++i) csv += ",p" + std::to_string(i);
  csv += "\n";
  std::size_t row_index = 0;
  for (std::size_t j = 0; j < m; j += stride, ++row_index) {
    csv += fmt(r.grid.time(j));
    double total = 0.0;
    for (const auto& row : p) total += row[row_index];
    csv += "," + fmt(total);
    for (const auto& row : p) csv += "," + fmt(row[row_index]);
    csv += "\n";
  }
  return csv;
}

}  // namespace

RunResult run_scenario(const Scenario& s, const std::filesystem::path& out_dir) {
  const bool ode_occupations =
      s.output.occupations && s.engine == EngineMode::ode;
  Execution ex = execute(s, ode_occupations);
  RunResult result = measure(s, ex);

  const std::filesystem::path dir = out_dir / s.name;
  std::filesystem::create_directories(dir);
  const std::size_t stride =
      std::max<std::size_t>(1, ex.resolved.grid.count / s.output.trace_points);

  atomic_write(dir / "trace.csv", trace_csv(ex, stride));
  result.files.push_back(dir / "trace.csv");
  if (s.output.occupations) {
    atomic_write(dir / "occupations.csv", occupations_csv(s, ex, stride));
    result.files.push_back(dir / "occupations.csv");
  }
  std::string metrics_csv = EchoReport::csv_header(
      static_cast<int>(result.report.echoes.size()));
  metrics_csv = "delay,window_efficiency,first_fidelity," + metrics_csv + "\n";
  metrics_csv += fmt(result.delay) + "," + fmt(result.window_efficiency) +
                 "," + fmt(result.first_fidelity) + "," +
                 result.report.csv_row() + "\n";
  atomic_write(dir / "metrics.csv", metrics_csv);
  result.files.push_back(dir / "metrics.csv");
  atomic_write(dir / "manifest.txt", manifest_text(s, ex, result, stride));
  result.files.push_back(dir / "manifest.txt");
  return result;
}

namespace {

void apply_axis(Scenario& s, const std::string& key, double value) {
  if (key == "kappa") {
    s.coupling = value;
  } else if (key == "gamma") {
    s.loss = value;
    s.finesse = 0.0;
  } else if (key == "finesse") {
    s.finesse = value;
    s.loss = 0.0;
  } else if (key == "spacing") {
    s.spacing = value;
  } else if (key == "count") {
    s.count = static_cast<int>(value);
  } else {
    throw ValidationError("sweep: not a sweepable parameter '" + key + "'");
  }
}

}  // namespace

std::filesystem::path run_sweep(const SweepRequest& request,
                                const std::filesystem::path& out_dir,
                                int workers) {
  std::size_t cells = 1;
  for (const auto& axis : request.axes) {
    if (axis.values.empty()) {
      throw ValidationError("sweep: axis '" + axis.key + "' has no values");
    }
    cells *= axis.values.size();
  }
  if (cells > 10000 && !request.allow_large) {
    throw ResourceError(
        "sweep: more than 10000 cells; set sweep.allow_large = true");
  }

  struct Row {
    std::vector<double> values;
    RunResult result;
  };
  std::vector<Row> rows(cells);

  run_parallel(cells, workers, [&](std::size_t cell) {
    Scenario s = request.base;
    std::vector<double> values(request.axes.size());
    std::size_t rem = cell;
    for (std::size_t a = request.axes.size(); a-- > 0;) {
      const auto& axis = request.axes[a];
      const std::size_t i = rem % axis.values.size();
      rem /= axis.values.size();
      values[a] = axis.values[i];
      apply_axis(s, axis.key, axis.values[i]);
    }
    Execution ex = execute(s, false);
    rows[cell] = Row{std::move(values), measure(s, ex)};
  });

  std::string csv;
  for (const auto& axis : request.axes) csv += axis.key + ",";
  csv += "delay,window_efficiency,first_fidelity,wraparound_fraction," +
         EchoReport::csv_header(request.base.echo_count) + "\n";
  for (const auto& row : rows) {
    for (const double v : row.values) csv += fmt(v) + ",";
    csv += fmt(row.result.delay) + "," + fmt(row.result.window_efficiency) +
           "," + fmt(row.result.first_fidelity) + "," +
           fmt(row.result.wraparound_fraction) + "," +
           row.result.report.csv_row(request.base.echo_count) + "\n";
  }

  const std::filesystem::path dir = out_dir / request.base.name;
  std::filesystem::create_directories(dir);
  const std::filesystem::path path = dir / "sweep.csv";
  atomic_write(path, csv);
  return path;
}

}  // namespace ringecho
