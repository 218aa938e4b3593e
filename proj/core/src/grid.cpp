#include "ringecho/grid.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <string>

#include "ringecho/errors.hpp"

namespace ringecho {

void TimeGrid::validate() const {
  if (!(step > 0.0) || !std::isfinite(step) || !std::isfinite(start)) {
    throw ValidationError("grid: step must be positive and finite");
  }
  if (count < 2 || count % 2 != 0) {
    throw ValidationError("grid: count must be even and >= 2");
  }
}

namespace {

// Slowest rate the frequency grid has to resolve: min over cavities of the
// intrinsic half-width (when positive) and the loaded half-width.
double slowest_rate(const ArraySpec& spec) {
  double r = std::numeric_limits<double>::infinity();
  for (const auto& c : spec.cavities) {
    const double loaded = 0.5 * c.coupling + c.linewidth;
    if (c.linewidth > 0.0) r = std::min(r, c.linewidth);
    if (loaded > 0.0) r = std::min(r, loaded);
  }
  return r;
}

}  // namespace

TimeGrid make_time_grid(const ArraySpec& spec, double input_width,
                        const GridBudget& budget) {
  if (!(input_width > 0.0) || !std::isfinite(input_width)) {
    throw ValidationError("make_time_grid: input width must be positive");
  }
  if (!(budget.bandwidth_factor > 0.0)) {
    throw ValidationError("make_time_grid: bandwidth factor must be positive");
  }
  if (budget.echoes_to_cover < 0) {
    throw ValidationError("make_time_grid: echoes_to_cover must be >= 0");
  }

  const double band =
      std::max({spec.max_absolute_detuning(), input_width});
  const double dt = std::numbers::pi / (budget.bandwidth_factor * band);

  const double support = budget.pre_time + budget.post_time;
  double duration = 0.0;
  if (budget.explicit_duration > 0.0) {
    if (budget.explicit_duration < support) {
      throw ValidationError(
          "make_time_grid: explicit duration shorter than the input support");
    }
    duration = budget.explicit_duration;
  } else if (budget.echoes_to_cover == 0) {
    duration = support;
  } else {
    if (spec.comb_spacing <= 0.0) {
      throw ValidationError(
          "make_time_grid: echo-based sizing needs comb spacing > 0; "
          "supply an explicit duration");
    }
    const double echo_span =
        budget.echoes_to_cover * (2.0 * std::numbers::pi / spec.comb_spacing);
    duration = echo_span + support;
    const double rate = slowest_rate(spec);
    if (std::isfinite(rate)) {
      // dw <= rate/8  <=>  duration >= 16*pi/rate
      duration = std::max(duration, 16.0 * std::numbers::pi / rate);
    }
  }

  const double raw_count = std::ceil(duration / dt);
  if (!(raw_count > 0.0) ||
      raw_count > static_cast<double>(std::size_t{1} << 40)) {
    throw ResourceError("make_time_grid: degenerate sample count");
  }
  std::size_t count = std::bit_ceil(static_cast<std::size_t>(raw_count));
  count = std::max<std::size_t>(count, 2);
  if (count > budget.sample_cap) {
    throw ResourceError("make_time_grid: " + std::to_string(count) +
                        " samples exceed the cap of " +
                        std::to_string(budget.sample_cap));
  }

  TimeGrid grid;
  grid.start = -budget.pre_time;
  grid.step = dt;
  grid.count = count;
  grid.validate();
  return grid;
}

}  // namespace ringecho
