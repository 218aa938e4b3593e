#include <doctest.h>

#include <cmath>

#include "ringecho/errors.hpp"
#include "ringecho/fourier.hpp"
#include "ringecho/pulse.hpp"

using namespace ringecho;

namespace {

TimeGrid standard_grid() { return TimeGrid{-32.0, 0.03125, 4096}; }

// 1/e full width of |X|^2 by linear interpolation of the crossings.
double spectral_intensity_width(const SpectrumSamples& X) {
  std::size_t peak = 0;
  double pmax = 0.0;
  for (std::size_t k = 0; k < X.samples.size(); ++k) {
    if (std::norm(X.samples[k]) > pmax) {
      pmax = std::norm(X.samples[k]);
      peak = k;
    }
  }
  const double target = pmax / std::numbers::e;
  auto cross = [&](int dir) {
    std::size_t k = peak;
    while (std::norm(X.samples[k]) > target) k += dir;
    const double a = std::norm(X.samples[k - dir]);
    const double b = std::norm(X.samples[k]);
    const double frac = (a - target) / (a - b);
    return X.grid.freq(k - dir) + dir * frac * X.grid.freq_step();
  };
  return cross(+1) - cross(-1);
}

int count_humps(const SampledSignal& s) {
  double pmax = 0.0;
  for (const auto& v : s.samples) pmax = std::max(pmax, std::norm(v));
  int humps = 0;
  for (std::size_t j = 1; j + 1 < s.samples.size(); ++j) {
    const double p = std::norm(s.samples[j]);
    if (p > 0.1 * pmax && p > std::norm(s.samples[j - 1]) &&
        p >= std::norm(s.samples[j + 1])) {
      ++humps;
    }
  }
  return humps;
}

}  // namespace

TEST_CASE("gaussian pulse has unit energy") {
  const SampledSignal g = gaussian_pulse(standard_grid(), 0.0, 1.0);
  CHECK(energy(g) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("insufficient grid margin is rejected") {
  TimeGrid grid{-2.0, 0.125, 64};  // ends at 6
  CHECK_THROWS_AS(gaussian_pulse(grid, 4.0, 1.0), ValidationError);
  CHECK_THROWS_AS(gaussian_pulse(grid, -1.0, 1.0), ValidationError);
  CHECK_NOTHROW(gaussian_pulse(grid, 1.0, 3.0));
}

TEST_CASE("spectral intensity has 1/e full width 2*delta") {
  for (const double delta : {1.0, 2.0}) {
    const SampledSignal g = gaussian_pulse(standard_grid(), 0.0, delta);
    const double width = spectral_intensity_width(analyze(g));
    CHECK(width == doctest::Approx(2.0 * delta).epsilon(0.01));
  }
}

TEST_CASE("width-1 spectrum spans a 61-line comb of spacing 0.1") {
  const SampledSignal g = gaussian_pulse(standard_grid(), 0.0, 1.0);
  const SpectrumSamples X = analyze(g);
  // intensity at the comb edge (detuning 3) relative to the center
  double at_edge = 0.0, at_center = 0.0;
  for (std::size_t k = 0; k < X.samples.size(); ++k) {
    if (std::abs(X.grid.freq(k) - 3.0) < 0.5 * X.grid.freq_step()) {
      at_edge = std::norm(X.samples[k]);
    }
    if (std::abs(X.grid.freq(k)) < 0.5 * X.grid.freq_step()) {
      at_center = std::norm(X.samples[k]);
    }
  }
  CHECK(at_edge / at_center == doctest::Approx(std::exp(-9.0)).epsilon(0.03));
}

TEST_CASE("three-pulse input resolves three humps at spacing 8") {
  const MultiPulse p =
      three_pulse_input(standard_grid(), 8.0, {1.0, 1.0, 1.0});
  CHECK(energy(p.signal) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_FALSE(p.overlap_warning);
  CHECK(count_humps(p.signal) == 3);
}

TEST_CASE("zero amplitude reduces to a two-pulse input") {
  const MultiPulse p =
      three_pulse_input(standard_grid(), 8.0, {1.0, 0.0, 1.0});
  CHECK(count_humps(p.signal) == 2);
}

TEST_CASE("close spacing sets the overlap warning") {
  const MultiPulse p =
      three_pulse_input(standard_grid(), 1.0, {1.0, 1.0, 1.0});
  CHECK(p.overlap_warning);
}
