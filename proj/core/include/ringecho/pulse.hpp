#pragma once

#include <array>
#include <vector>

#include "ringecho/signal.hpp"

namespace ringecho {

/// Input pulse description. Envelopes are Gaussian,
/// A(t) ~ exp(-w^2 (t-t0)^2 / 2) with spectral amplitude ~ exp(-omega^2/(2 w^2)),
/// i.e. spectral_width is the 1/sqrt(e) half-width of the spectral amplitude.
/// Total energy is normalized to 1.
struct PulseSpec {
  enum class Shape { gaussian, multi_gaussian };
  struct Component {
    double offset = 0.0;     ///< center relative to the pulse center
    double amplitude = 1.0;  ///< relative amplitude
  };

  Shape shape = Shape::gaussian;
  double spectral_width = 1.0;
  double center = 0.0;
  std::vector<Component> components;  ///< used by multi_gaussian
};

/// Unit-energy Gaussian centered at t_center. The support must fit inside the
/// grid with at least 5 sigma margins on both sides.
SampledSignal gaussian_pulse(const TimeGrid& grid, double t_center,
                             double spectral_width = 1.0);

struct MultiPulse {
  SampledSignal signal;
  bool overlap_warning = false;  ///< neighboring components overlap > 50%
};

/// Sum of three Gaussians at center - spacing, center, center + spacing,
/// renormalized to unit energy. The warning flag is set when adjacent
/// components have amplitude overlap |<g_i, g_j>| above one half.
MultiPulse three_pulse_input(const TimeGrid& grid, double spacing,
                             std::array<double, 3> amplitudes,
                             double spectral_width = 1.0, double center = 0.0);

/// General builder dispatching on PulseSpec::shape.
MultiPulse build_pulse(const TimeGrid& grid, const PulseSpec& spec);

}  // namespace ringecho
