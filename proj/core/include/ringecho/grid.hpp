#pragma once

#include <cstddef>
#include <numbers>

#include "ringecho/cavity.hpp"

namespace ringecho {

/// Uniform time grid. The paired frequency grid has step 2*pi/(count*step)
/// and spans detunings symmetric about zero: freq(k) = (k - count/2)*freq_step.
struct TimeGrid {
  double start = 0.0;
  double step = 0.0;
  std::size_t count = 0;

  double time(std::size_t j) const { return start + step * static_cast<double>(j); }
  double duration() const { return step * static_cast<double>(count); }
  double end() const { return start + duration(); }
  double freq_step() const {
    return 2.0 * std::numbers::pi / (step * static_cast<double>(count));
  }
  double freq(std::size_t k) const {
    return (static_cast<double>(k) - static_cast<double>(count / 2)) * freq_step();
  }
  double nyquist() const { return std::numbers::pi / step; }

  bool operator==(const TimeGrid&) const = default;

  void validate() const;  // step > 0, count >= 2 and even
};

/// Sizing requests for make_time_grid.
struct GridBudget {
  double bandwidth_factor = 4.0;  ///< Nyquist >= factor * max(|detuning|, input width)
  int echoes_to_cover = 4;        ///< periods of 2*pi/Delta the window must span
  double pre_time = 16.0;         ///< window opens at -pre_time
  double post_time = 16.0;        ///< margin beyond the last covered echo
  double explicit_duration = 0.0; ///< overrides echo-based sizing when > 0
  std::size_t sample_cap = std::size_t{1} << 26;
};

/// Sizes a grid for the given array and input spectral width.
///
/// With echoes_to_cover > 0 the window spans that many echo periods plus the
/// input support, and the frequency step resolves the slowest decay rate
/// min(gamma, kappa/2 + gamma) with eight samples per half-width. An
/// explicit_duration bypasses the echo sizing (required when comb_spacing is
/// zero). The sample count is rounded up to a power of two; exceeding
/// sample_cap raises ResourceError.
TimeGrid make_time_grid(const ArraySpec& spec, double input_width,
                        const GridBudget& budget = {});

}  // namespace ringecho
