#include "ringecho/pulse.hpp"

#include <cmath>

#include "ringecho/errors.hpp"

namespace ringecho {

namespace {

void check_margin(const TimeGrid& grid, double center, double width,
                  const char* what) {
  const double margin = 5.0 / width;  // 5 sigma of the envelope
  if (center - margin < grid.start || center + margin > grid.end()) {
    throw ValidationError(std::string(what) +
                          ": pulse support does not fit inside the grid "
                          "with 5 sigma margins");
  }
}

void normalize_energy(SampledSignal& s) {
  double e = energy(s);
  if (e <= 0.0) throw ValidationError("pulse: zero energy");
  const double scale = 1.0 / std::sqrt(e);
  for (auto& v : s.samples) v *= scale;
}

void add_gaussian(SampledSignal& s, double center, double width,
                  double amplitude) {
  for (std::size_t j = 0; j < s.samples.size(); ++j) {
    const double u = width * (s.grid.time(j) - center);
    s.samples[j] += amplitude * std::exp(-0.5 * u * u);
  }
}

}  // namespace

SampledSignal gaussian_pulse(const TimeGrid& grid, double t_center,
                             double spectral_width) {
  grid.validate();
  if (!(spectral_width > 0.0)) {
    throw ValidationError("gaussian_pulse: spectral width must be positive");
  }
  check_margin(grid, t_center, spectral_width, "gaussian_pulse");
  SampledSignal s;
  s.grid = grid;
  s.samples.assign(grid.count, Complex{});
  add_gaussian(s, t_center, spectral_width, 1.0);
  normalize_energy(s);
  return s;
}

MultiPulse three_pulse_input(const TimeGrid& grid, double spacing,
                             std::array<double, 3> amplitudes,
                             double spectral_width, double center) {
  PulseSpec spec;
  spec.shape = PulseSpec::Shape::multi_gaussian;
  spec.spectral_width = spectral_width;
  spec.center = center;
  spec.components = {{-spacing, amplitudes[0]},
                     {0.0, amplitudes[1]},
                     {spacing, amplitudes[2]}};
  return build_pulse(grid, spec);
}

MultiPulse build_pulse(const TimeGrid& grid, const PulseSpec& spec) {
  grid.validate();
  if (!(spec.spectral_width > 0.0)) {
    throw ValidationError("pulse: spectral width must be positive");
  }
  MultiPulse result;
  result.signal.grid = grid;
  result.signal.samples.assign(grid.count, Complex{});

  if (spec.shape == PulseSpec::Shape::gaussian) {
    check_margin(grid, spec.center, spec.spectral_width, "pulse");
    add_gaussian(result.signal, spec.center, spec.spectral_width, 1.0);
  } else {
    if (spec.components.empty()) {
      throw ValidationError("pulse: multi_gaussian needs components");
    }
    for (const auto& c : spec.components) {
      if (c.amplitude == 0.0) continue;
      check_margin(grid, spec.center + c.offset, spec.spectral_width, "pulse");
      add_gaussian(result.signal, spec.center + c.offset, spec.spectral_width,
                   c.amplitude);
    }
    // Amplitude overlap of unit-energy Gaussians separated by s is
    // exp(-(w s)^2 / 4); flag neighbors above one half.
    for (std::size_t i = 0; i + 1 < spec.components.size(); ++i) {
      for (std::size_t j = i + 1; j < spec.components.size(); ++j) {
        if (spec.components[i].amplitude == 0.0 ||
            spec.components[j].amplitude == 0.0) {
          continue;
        }
        const double s =
            std::abs(spec.components[j].offset - spec.components[i].offset);
        const double u = spec.spectral_width * s;
        if (std::exp(-0.25 * u * u) > 0.5) result.overlap_warning = true;
      }
    }
  }
  normalize_energy(result.signal);
  return result;
}

}  // namespace ringecho
