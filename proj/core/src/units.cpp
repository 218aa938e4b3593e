#include "ringecho/units.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>

#include "ringecho/errors.hpp"
#include "ringecho/grid.hpp"
#include "ringecho/metrics.hpp"
#include "ringecho/propagation.hpp"
#include "ringecho/pulse.hpp"

namespace ringecho {

namespace {

constexpr double kSpeedOfLight = 299792458.0;  // m/s

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

}  // namespace

PhysicalCavity PhysicalCavity::from_quality(double carrier, double wavelength,
                                            double diameter, double fsr,
                                            double quality) {
  PhysicalCavity p;
  p.carrier = carrier;
  p.wavelength = wavelength;
  p.diameter = diameter;
  p.free_spectral_range = fsr;
  p.quality = quality;
  p.intrinsic_rate = carrier / (2.0 * quality);
  p.validate();
  return p;
}

PhysicalCavity PhysicalCavity::from_rate(double carrier, double wavelength,
                                         double diameter, double fsr,
                                         double intrinsic_rate) {
  PhysicalCavity p;
  p.carrier = carrier;
  p.wavelength = wavelength;
  p.diameter = diameter;
  p.free_spectral_range = fsr;
  p.intrinsic_rate = intrinsic_rate;
  p.quality = carrier / (2.0 * intrinsic_rate);
  p.validate();
  return p;
}

PhysicalCavity PhysicalCavity::from_both(double carrier, double wavelength,
                                         double diameter, double fsr,
                                         double quality, double intrinsic_rate) {
  PhysicalCavity p;
  p.carrier = carrier;
  p.wavelength = wavelength;
  p.diameter = diameter;
  p.free_spectral_range = fsr;
  p.quality = quality;
  p.intrinsic_rate = intrinsic_rate;
  const double implied = carrier / (2.0 * quality);
  p.q_rate_consistent =
      std::abs(intrinsic_rate - implied) <= 1e-6 * std::abs(implied);
  p.validate();
  return p;
}

void PhysicalCavity::validate() const {
  if (!(carrier > 0.0) || !(quality > 0.0) || !(intrinsic_rate > 0.0) ||
      !(free_spectral_range > 0.0)) {
    throw ValidationError("physical cavity: rates must be positive");
  }
  if (wavelength < 0.0 || diameter < 0.0) {
    throw ValidationError("physical cavity: negative geometry");
  }
}

NormalizedSeed to_normalized(const PhysicalCavity& p, int count,
                             double pulse_duration_s, double width_to_spacing,
                             double coupling_to_spacing) {
  p.validate();
  if (count < 2) throw ValidationError("to_normalized: count must be >= 2");
  if (!(pulse_duration_s > 0.0)) {
    throw ValidationError("to_normalized: pulse duration must be positive");
  }
  if (!(width_to_spacing > 0.0) || !(coupling_to_spacing >= 0.0)) {
    throw ValidationError("to_normalized: nonphysical ratio");
  }

  NormalizedSeed seed;
  seed.time_scale = pulse_duration_s;
  seed.spectral_width_phys = 1.0 / pulse_duration_s;
  seed.comb_spacing_phys = seed.spectral_width_phys / width_to_spacing;
  seed.coupling_phys = coupling_to_spacing * seed.comb_spacing_phys;
  if (seed.comb_spacing_phys * (count - 1) > p.free_spectral_range) {
    throw ValidationError(
        "to_normalized: comb exceeds one free spectral range");
  }

  const double spacing_norm = 1.0 / width_to_spacing;
  const double linewidth_norm = p.intrinsic_rate * pulse_duration_s;
  // Config-facing coupling is the external half-linewidth; the internal
  // field rate is twice that.
  const double coupling_norm = 2.0 * coupling_to_spacing * spacing_norm;
  seed.array =
      build_comb_array(count, spacing_norm, linewidth_norm, coupling_norm);
  return seed;
}

double diameter_step(const PhysicalCavity& p, double comb_spacing_phys) {
  p.validate();
  return comb_spacing_phys * p.diameter / p.carrier;
}

double max_comb_spacing(const PhysicalCavity& p, int count) {
  p.validate();
  if (count < 2) throw ValidationError("max_comb_spacing: count must be >= 2");
  return p.free_spectral_range / static_cast<double>(count - 1);
}

namespace {

struct NormalizedRun {
  double delay = 0.0;
  double eta = 0.0;
  double window_lo = 0.0;
  double window_hi = 0.0;
};

NormalizedRun run_crc(double finesse, const DelayTableOptions& opt) {
  const double spacing = 1.0 / opt.width_to_spacing;
  const double linewidth = spacing / (4.0 * finesse);  // field rate, F = D/(2*gamma_I)
  const double coupling = 2.0 * opt.coupling_crc;
  const ArraySpec spec =
      build_comb_array(opt.count, spacing, linewidth, coupling);

  GridBudget budget;
  budget.echoes_to_cover = 2;
  const TimeGrid grid = make_time_grid(spec, 1.0, budget);
  const SampledSignal input = gaussian_pulse(grid, 0.0);
  const SampledSignal output = propagate(spec, input);

  NormalizedRun run;
  const double period = 2.0 * std::numbers::pi / spacing;
  run.window_lo = 0.5 * period;
  run.window_hi = 1.5 * period;
  run.eta = efficiency(input, output, {run.window_lo, run.window_hi});
  run.delay = delay_time(input, output);
  return run;
}

NormalizedRun run_scissor(const DelayTableOptions& opt) {
  ArraySpec spec;
  spec.comb_spacing = 0.0;
  for (int n = 0; n < opt.count; ++n) {
    CavityParams c;
    c.detuning = 0.0;
    c.linewidth = 0.5 * opt.scissor_loss;
    c.coupling = 2.0 * opt.coupling_scissor;
    c.index = n;
    spec.cavities.push_back(c);
  }
  spec.validate();

  GridBudget budget;
  budget.bandwidth_factor = 16.0;
  budget.explicit_duration = 192.0;
  const TimeGrid grid = make_time_grid(spec, 1.0, budget);
  const SampledSignal input = gaussian_pulse(grid, 0.0);
  const SampledSignal output = propagate(spec, input);

  NormalizedRun run;
  const EchoWindow w = dominant_window(output);
  run.window_lo = w.t_lo;
  run.window_hi = w.t_hi;
  run.eta = efficiency(input, output, w);
  run.delay = delay_time(input, output);
  return run;
}

}  // namespace

std::vector<DelayTableEntry> table_delays(std::span<const DelayTableRow> rows,
                                          const DelayTableOptions& options) {
  std::map<std::pair<int, long long>, NormalizedRun> cache;
  std::vector<DelayTableEntry> entries;
  entries.reserve(rows.size());
  const double fiber_transit = (options.count - 1) * options.cavity_spacing_m *
                               options.fiber_index / kSpeedOfLight;
  for (const auto& row : rows) {
    if (!(row.pulse_duration_s > 0.0)) {
      throw ValidationError("table_delays: pulse duration must be positive");
    }
    if (row.scheme == Scheme::crc && !(row.finesse > 0.0)) {
      throw ValidationError("table_delays: finesse must be positive");
    }
    const auto key = std::make_pair(
        static_cast<int>(row.scheme),
        static_cast<long long>(std::llround(row.finesse * 1e6)));
    auto it = cache.find(key);
    if (it == cache.end()) {
      const NormalizedRun run = row.scheme == Scheme::crc
                                    ? run_crc(row.finesse, options)
                                    : run_scissor(options);
      it = cache.emplace(key, run).first;
    }
    DelayTableEntry e;
    e.row = row;
    e.delay_normalized = it->second.delay;
    e.delay_s = it->second.delay * row.pulse_duration_s;
    e.eta = it->second.eta;
    e.window_lo = it->second.window_lo;
    e.window_hi = it->second.window_hi;
    e.fiber_transit_s = fiber_transit;
    entries.push_back(e);
  }
  return entries;
}

std::string delay_table_csv(std::span<const DelayTableEntry> entries) {
  std::string out =
      "scheme,quality,finesse,pulse_duration_s,delay_s,eta,"
      "delay_normalized,eta_window_lo,eta_window_hi,fiber_transit_s\n";
  for (const auto& e : entries) {
    out += e.row.scheme == Scheme::crc ? "crc" : "scissor";
    out += "," + fmt(e.row.quality) + "," + fmt(e.row.finesse) + "," +
           fmt(e.row.pulse_duration_s) + "," + fmt(e.delay_s) + "," +
           fmt(e.eta) + "," + fmt(e.delay_normalized) + "," +
           fmt(e.window_lo) + "," + fmt(e.window_hi) + "," +
           fmt(e.fiber_transit_s) + "\n";
  }
  return out;
}

std::vector<DelayTableRow> delay_table_rows_schemes() {
  std::vector<DelayTableRow> rows;
  const double qs[] = {1e8, 1e8, 1e10, 1e10};
  const double ts[] = {1.2e-12, 32e-12, 0.12e-9, 3.2e-9};
  for (int i = 0; i < 4; ++i) {
    rows.push_back({qs[i], ts[i], 500.0, Scheme::scissor});
    rows.push_back({qs[i], ts[i], 500.0, Scheme::crc});
  }
  return rows;
}

std::vector<DelayTableRow> delay_table_rows_low_finesse() {
  return {{1e8, 1.6e-9, 10.0, Scheme::crc},
          {1e8, 5.33e-9, 3.0, Scheme::crc},
          {1e10, 0.16e-6, 10.0, Scheme::crc},
          {1e10, 0.533e-6, 3.0, Scheme::crc}};
}

}  // namespace ringecho
