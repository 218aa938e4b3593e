#include "ringecho/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "ringecho/errors.hpp"
#include "ringecho/fourier.hpp"

namespace ringecho {

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

struct Range {
  std::size_t first = 0;  // inclusive
  std::size_t last = 0;   // exclusive
  bool empty() const { return last <= first; }
};

Range sample_range(const TimeGrid& grid, EchoWindow w) {
  Range r;
  const double lo = std::max(w.t_lo, grid.start);
  const double hi = std::min(w.t_hi, grid.end());
  if (hi <= lo) return r;
  r.first = static_cast<std::size_t>(std::max(0.0, std::ceil((lo - grid.start) / grid.step)));
  r.last = std::min(grid.count, static_cast<std::size_t>(
                                    std::ceil((hi - grid.start) / grid.step)));
  return r;
}

double window_energy(const SampledSignal& s, Range r) {
  double acc = 0.0;
  for (std::size_t j = r.first; j < r.last; ++j) acc += std::norm(s.samples[j]);
  return acc * s.grid.step;
}

double window_centroid(const SampledSignal& s, Range r) {
  double w = 0.0;
  double tw = 0.0;
  for (std::size_t j = r.first; j < r.last; ++j) {
    const double p = std::norm(s.samples[j]);
    w += p;
    tw += p * s.grid.time(j);
  }
  return w > 0.0 ? tw / w : 0.5 * (s.grid.time(r.first) + s.grid.time(r.last));
}

// Largest-energy contiguous region above 1% of the peak intensity.
Range dominant_range(const SampledSignal& s) {
  double peak = 0.0;
  for (const auto& v : s.samples) peak = std::max(peak, std::norm(v));
  if (peak <= 0.0) throw ValidationError("dominant window: empty signal");
  const double thresh = 0.01 * peak;
  Range best;
  double best_energy = -1.0;
  std::size_t j = 0;
  const std::size_t m = s.samples.size();
  while (j < m) {
    if (std::norm(s.samples[j]) > thresh) {
      std::size_t k = j;
      double e = 0.0;
      while (k < m && std::norm(s.samples[k]) > thresh) {
        e += std::norm(s.samples[k]);
        ++k;
      }
      if (e > best_energy) {
        best_energy = e;
        best = Range{j, k};
      }
      j = k;
    } else {
      ++j;
    }
  }
  return best;
}

}  // namespace

double efficiency(const SampledSignal& input, const SampledSignal& output,
                  EchoWindow window) {
  input.validate();
  output.validate();
  const double e_in = energy(input);
  if (e_in <= 0.0) throw ValidationError("efficiency: input has no energy");
  const Range r = sample_range(output.grid, window);
  if (r.empty()) throw ValidationError("efficiency: empty window");
  return window_energy(output, r) / e_in;
}

EchoReport detect_echoes(const SampledSignal& output,
                         const SampledSignal& input, double comb_spacing,
                         int k_max, double t_ref) {
  output.validate();
  input.validate();
  if (comb_spacing <= 0.0) {
    throw ValidationError("detect_echoes: no comb period (spacing <= 0)");
  }
  if (k_max < 0) throw ValidationError("detect_echoes: negative echo count");
  const double e_in = energy(input);
  if (e_in <= 0.0) throw ValidationError("detect_echoes: input has no energy");

  const double period = 2.0 * std::numbers::pi / comb_spacing;
  EchoReport report;
  report.total_output_fraction = energy(output) / e_in;

  const Range trans = sample_range(
      output.grid, {output.grid.start, t_ref + 0.5 * period});
  report.transmitted_fraction =
      trans.empty() ? 0.0 : window_energy(output, trans) / e_in;

  for (int k = 1; k <= k_max; ++k) {
    EchoPeak peak;
    peak.window = {k * period - 0.5 * period, k * period + 0.5 * period};
    const EchoWindow abs_window{t_ref + peak.window.t_lo,
                                t_ref + peak.window.t_hi};
    const Range r = sample_range(output.grid, abs_window);
    if (r.empty()) {
      peak.peak_time = k * period;
      report.echoes.push_back(peak);
      continue;
    }
    const double e = window_energy(output, r);
    peak.energy_fraction = e / e_in;
    peak.peak_time = e > 0.0 ? window_centroid(output, r) - t_ref : k * period;
    peak.fidelity = e > 0.0 ? fidelity(input, output, abs_window) : 0.0;
    report.echoes.push_back(peak);
  }
  return report;
}

EchoWindow dominant_window(const SampledSignal& s) {
  s.validate();
  const Range r = dominant_range(s);
  return {s.grid.time(r.first), s.grid.time(r.last)};
}

double delay_time(const SampledSignal& input, const SampledSignal& output) {
  input.validate();
  output.validate();
  if (energy(input) <= 0.0) {
    throw ValidationError("delay_time: input has no energy");
  }
  if (energy(output) < 1e-6) {
    throw ValidationError("delay_time: output below the 1e-6 energy threshold");
  }
  const Range r = dominant_range(output);
  return window_centroid(output, r) - centroid(input);
}

double fidelity(const SampledSignal& input, const SampledSignal& output,
                EchoWindow window) {
  input.validate();
  output.validate();
  if (input.grid != output.grid) {
    throw ValidationError("fidelity: signals on different grids");
  }
  const Range r = sample_range(output.grid, window);
  if (r.empty()) throw ValidationError("fidelity: empty window");

  const double e_in = energy(input);
  if (e_in <= 0.0) throw ValidationError("fidelity: input has no energy");
  std::vector<Complex> windowed(output.grid.count, Complex{});
  for (std::size_t j = r.first; j < r.last; ++j) {
    windowed[j] = output.samples[j];
  }
  double e_win = 0.0;
  for (const auto& v : windowed) e_win += std::norm(v);
  e_win *= output.grid.step;
  if (e_win <= 0.0) return 0.0;

  // z_s = sum_j y_j conj(x_{j-s}), all shifts at once via circular correlation
  std::vector<Complex> fx = input.samples;
  detail::fft_inplace(fx, -1);
  detail::fft_inplace(windowed, -1);
  for (std::size_t k = 0; k < windowed.size(); ++k) {
    windowed[k] *= std::conj(fx[k]);
  }
  detail::fft_inplace(windowed, +1);

  const std::size_t m = windowed.size();
  std::size_t best = 0;
  double best_mag = -1.0;
  for (std::size_t s = 0; s < m; ++s) {
    const double mag = std::norm(windowed[s]);
    if (mag > best_mag) {
      best_mag = mag;
      best = s;
    }
  }
  // Sub-sample refinement: parabolic vertex through the cyclic neighbors.
  const double c0 = best_mag;
  const double cm = std::norm(windowed[(best + m - 1) % m]);
  const double cp = std::norm(windowed[(best + 1) % m]);
  const double denom = cm - 2.0 * c0 + cp;
  double peak = c0;
  if (denom < 0.0) peak = c0 - (cm - cp) * (cm - cp) / (8.0 * denom);

  const double dt = input.grid.step;
  const double scale = dt * dt / (static_cast<double>(m) * static_cast<double>(m));
  const double value = peak * scale / (e_in * e_win);
  return std::min(value, 1.0);
}

std::string EchoReport::csv_header(int echo_count) {
  std::string h = "transmitted_fraction,total_output_fraction";
  for (int k = 1; k <= echo_count; ++k) {
    const std::string s = std::to_string(k);
    h += ",echo" + s + "_time,echo" + s + "_energy,echo" + s + "_fidelity";
  }
  return h;
}

std::string EchoReport::csv_row(int echo_count) const {
  std::string row = fmt(transmitted_fraction) + "," + fmt(total_output_fraction);
  const std::size_t n =
      echo_count >= 0 ? static_cast<std::size_t>(echo_count) : echoes.size();
  for (std::size_t k = 0; k < n; ++k) {
    if (k < echoes.size()) {
      const auto& e = echoes[k];
      row += "," + fmt(e.peak_time) + "," + fmt(e.energy_fraction) + "," +
             fmt(e.fidelity);
    } else {
      row += ",0,0,0";
    }
  }
  return row;
}

}  // namespace ringecho
