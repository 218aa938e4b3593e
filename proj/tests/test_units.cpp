#include <doctest.h>

#include <cmath>

#include "ringecho/errors.hpp"
#include "ringecho/units.hpp"

using namespace ringecho;

namespace {

// telecom microresonator: 1.26e15 rad/s carrier, 90 um diameter,
// 4.96e12 rad/s free spectral range
PhysicalCavity reference_cavity(double quality = 1.25e8) {
  return PhysicalCavity::from_quality(1.26e15, 1.5e-6, 90e-6, 4.96e12,
                                      quality);
}

}  // namespace

TEST_CASE("quality factor and field rate are tied by Q = w0/(2 gamma)") {
  const PhysicalCavity p = reference_cavity();
  CHECK(p.intrinsic_rate == doctest::Approx(1.26e15 / (2.0 * 1.25e8)));
  CHECK(p.q_rate_consistent);

  const PhysicalCavity r =
      PhysicalCavity::from_rate(1.26e15, 1.5e-6, 90e-6, 4.96e12, 5.04e6);
  CHECK(r.quality == doctest::Approx(1.26e15 / (2.0 * 5.04e6)));

  // mismatched pair is accepted but flagged
  const PhysicalCavity both = PhysicalCavity::from_both(
      1.26e15, 1.5e-6, 90e-6, 4.96e12, 1.25e8, 1e7);
  CHECK_FALSE(both.q_rate_consistent);
  const PhysicalCavity ok = PhysicalCavity::from_both(
      1.26e15, 1.5e-6, 90e-6, 4.96e12, 1.25e8, 1.26e15 / (2.0 * 1.25e8));
  CHECK(ok.q_rate_consistent);
}

TEST_CASE("61 lines fill one free spectral range at spacing FSR/60") {
  const PhysicalCavity p = reference_cavity();
  const double spacing = max_comb_spacing(p, 61);
  CHECK(spacing == doctest::Approx(4.96e12 / 60.0));
  CHECK(spacing == doctest::Approx(8.27e10).epsilon(2e-3));

  // matching pulse duration: width 10x the spacing
  const double t_s = 1.0 / (10.0 * spacing);
  const NormalizedSeed seed = to_normalized(p, 61, t_s, 10.0, 0.5);
  CHECK(seed.comb_spacing_phys == doctest::Approx(spacing).epsilon(1e-12));
  CHECK(seed.coupling_phys == doctest::Approx(4.135e10).epsilon(2e-3));
  CHECK(seed.array.comb_spacing == doctest::Approx(0.1).epsilon(1e-12));

  // one more line cannot fit
  CHECK_THROWS_AS(to_normalized(p, 62, t_s, 10.0, 0.5), ValidationError);
}

TEST_CASE("diameter step follows spacing * diameter / carrier") {
  const PhysicalCavity p = reference_cavity();
  const double spacing = max_comb_spacing(p, 61);
  CHECK(diameter_step(p, spacing) ==
        doctest::Approx(spacing * 90e-6 / 1.26e15).epsilon(1e-12));
  CHECK(diameter_step(p, spacing) == doctest::Approx(5.905e-9).epsilon(1e-3));
}

TEST_CASE("normalization round trip") {
  const PhysicalCavity p = reference_cavity();
  const double t_s = 32e-12;
  const NormalizedSeed seed = to_normalized(p, 61, t_s, 10.0, 0.5);
  CHECK(seed.time_scale == t_s);
  CHECK(seed.spectral_width_phys * t_s == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(seed.comb_spacing_phys * t_s ==
        doctest::Approx(seed.array.comb_spacing).epsilon(1e-12));
  // linewidth back-conversion reproduces the physical rate
  CHECK(seed.array.cavities.front().linewidth / t_s ==
        doctest::Approx(p.intrinsic_rate).epsilon(1e-12));
  // coupling field rate is twice the configured half-linewidth
  CHECK(seed.array.cavities.front().coupling ==
        doctest::Approx(2.0 * 0.5 * seed.array.comb_spacing).epsilon(1e-12));
}

TEST_CASE("normalized arrays depend only on the dimensionless ratios") {
  const PhysicalCavity a =
      PhysicalCavity::from_rate(1.26e15, 1.5e-6, 90e-6, 4.96e12, 1e7);
  const PhysicalCavity b =
      PhysicalCavity::from_rate(2.52e15, 0.75e-6, 45e-6, 4.96e15, 1e10);
  const NormalizedSeed sa = to_normalized(a, 31, 1e-9, 10.0, 0.5);
  const NormalizedSeed sb = to_normalized(b, 31, 1e-12, 10.0, 0.5);
  REQUIRE(sa.array.count() == sb.array.count());
  for (int n = 0; n < sa.array.count(); ++n) {
    const auto& ca = sa.array.cavities[n];
    const auto& cb = sb.array.cavities[n];
    CHECK(ca.detuning == doctest::Approx(cb.detuning).epsilon(1e-12));
    CHECK(ca.coupling == doctest::Approx(cb.coupling).epsilon(1e-12));
    CHECK(ca.linewidth == doctest::Approx(cb.linewidth).epsilon(1e-12));
  }
}

TEST_CASE("low-finesse delay table rows run and convert consistently") {
  const auto rows = delay_table_rows_low_finesse();
  REQUIRE(rows.size() == 4);
  const auto entries = table_delays(rows);
  REQUIRE(entries.size() == 4);
  for (const auto& e : entries) {
    CHECK(e.delay_s ==
          doctest::Approx(e.delay_normalized * e.row.pulse_duration_s)
              .epsilon(1e-12));
    CHECK(e.eta > 0.0);
    CHECK(e.eta < 1.0);
    CHECK(e.fiber_transit_s == doctest::Approx(60.0 * 100e-6 * 1.5 / 2.99792458e8));
  }
  // same finesse, different pulse duration: identical normalized physics
  CHECK(entries[0].delay_normalized == entries[2].delay_normalized);
  CHECK(entries[0].eta == entries[2].eta);
  // csv has one line per row plus the header
  const std::string csv = delay_table_csv(entries);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);
}
