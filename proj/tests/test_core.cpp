#include <doctest.h>

#include <cmath>
#include <numbers>

#include "ringecho/cavity.hpp"
#include "ringecho/errors.hpp"
#include "ringecho/grid.hpp"
#include "ringecho/signal.hpp"

using namespace ringecho;

TEST_CASE("comb construction matches the standard configuration") {
  const ArraySpec spec = build_comb_array(61, 0.1, 0.001, 0.05, true);
  CHECK(spec.count() == 61);
  CHECK(spec.cavities.front().detuning == doctest::Approx(-3.0).epsilon(1e-14));
  CHECK(spec.cavities.back().detuning == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(spec.finesse() == doctest::Approx(50.0).epsilon(1e-14));
  // arithmetic progression to a few ulps
  for (int n = 0; n + 1 < spec.count(); ++n) {
    const double d = spec.cavities[n + 1].detuning - spec.cavities[n].detuning;
    CHECK(std::abs(d - 0.1) < 1e-15);
  }
}

TEST_CASE("comb uniformity is exact for dyadic spacing") {
  const ArraySpec spec = build_comb_array(17, 0.125, 0.0, 0.25, true);
  for (int n = 0; n + 1 < spec.count(); ++n) {
    CHECK(spec.cavities[n + 1].detuning - spec.cavities[n].detuning == 0.125);
  }
}

TEST_CASE("single cavity and equal-frequency builds") {
  const ArraySpec one = build_comb_array(1, 0.0, 0.1, 0.2, true);
  CHECK(one.count() == 1);
  CHECK(one.cavities[0].detuning == 0.0);

  const ArraySpec sc = build_comb_array(61, 0.0, 1e-4, 7.5, true);
  CHECK(sc.scissor());
  for (const auto& c : sc.cavities) CHECK(c.detuning == 0.0);
}

TEST_CASE("validation rejects nonphysical cavities") {
  CHECK_THROWS_AS(build_comb_array(0, 0.1, 0.0, 0.1), ValidationError);
  CHECK_THROWS_AS(build_comb_array(3, -0.1, 0.0, 0.1), ValidationError);
  CHECK_THROWS_AS(build_comb_array(3, 0.1, -1.0, 0.1), ValidationError);
  CHECK_THROWS_AS(build_comb_array(3, 0.1, 0.0, -0.1), ValidationError);
  // totally decoupled lossless cavity
  CHECK_THROWS_AS(build_comb_array(3, 0.1, 0.0, 0.0), ValidationError);
  CHECK_THROWS_AS(
      build_comb_array(3, std::nan(""), 0.0, 0.1), ValidationError);
}

TEST_CASE("finesse accessor requires spacing and linewidth") {
  ArraySpec sc = build_comb_array(5, 0.0, 1e-4, 7.5, true);
  CHECK_THROWS_AS(sc.finesse(), ValidationError);
  ArraySpec lossless = build_comb_array(5, 0.1, 0.0, 0.05, true);
  CHECK_THROWS_AS(lossless.finesse(), ValidationError);
}

TEST_CASE("grid sizing covers the requested echo span") {
  const ArraySpec spec = build_comb_array(61, 0.1, 0.001, 0.05, true);
  GridBudget budget;
  budget.echoes_to_cover = 4;
  const TimeGrid grid = make_time_grid(spec, 1.0, budget);
  CHECK(grid.duration() >= 4.0 * 2.0 * std::numbers::pi / 0.1);
  // Nyquist covers the comb with the requested margin
  CHECK(grid.nyquist() >= 4.0 * 3.0);
  // frequency step resolves the slowest decay rate with 8 samples
  CHECK(grid.freq_step() <= 0.001 / 8.0);
  // power-of-two count
  CHECK((grid.count & (grid.count - 1)) == 0);
}

TEST_CASE("grid with echoes_to_cover = 0 spans only the input support") {
  const ArraySpec spec = build_comb_array(61, 0.1, 0.001, 0.05, true);
  GridBudget budget;
  budget.echoes_to_cover = 0;
  budget.pre_time = 16.0;
  budget.post_time = 16.0;
  const TimeGrid grid = make_time_grid(spec, 1.0, budget);
  CHECK(grid.duration() >= 32.0);
  CHECK(grid.duration() <= 2.05 * 32.0);  // power-of-two rounding only
}

TEST_CASE("grid pairing identity dw*dt*count = 2*pi") {
  const ArraySpec spec = build_comb_array(5, 0.2, 0.01, 0.1, true);
  const TimeGrid grid = make_time_grid(spec, 1.0, {});
  const double product = grid.freq_step() * grid.step *
                         static_cast<double>(grid.count);
  CHECK(product == doctest::Approx(2.0 * std::numbers::pi).epsilon(1e-15));
}

TEST_CASE("grid errors") {
  const ArraySpec spec = build_comb_array(61, 0.1, 1e-5, 0.05, true);
  GridBudget small_cap;
  small_cap.sample_cap = 1024;
  CHECK_THROWS_AS(make_time_grid(spec, 1.0, small_cap), ResourceError);

  const ArraySpec sc = build_comb_array(5, 0.0, 1e-4, 7.5, true);
  CHECK_THROWS_AS(make_time_grid(sc, 1.0, {}), ValidationError);
  GridBudget explicit_dur;
  explicit_dur.explicit_duration = 128.0;
  CHECK_NOTHROW(make_time_grid(sc, 1.0, explicit_dur));
}

TEST_CASE("signal energy and centroid") {
  TimeGrid grid{-2.0, 0.125, 64};
  SampledSignal s{grid, std::vector<Complex>(64, Complex{0.0, 0.0})};
  s.samples[16] = Complex{2.0, 0.0};
  CHECK(energy(s) == doctest::Approx(4.0 * 0.125));
  CHECK(centroid(s) == doctest::Approx(grid.time(16)));
  s.samples.assign(64, Complex{});
  CHECK_THROWS_AS(centroid(s), ValidationError);
}
