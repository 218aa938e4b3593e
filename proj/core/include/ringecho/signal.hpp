#pragma once

#include <complex>
#include <vector>

#include "ringecho/grid.hpp"

namespace ringecho {

using Complex = std::complex<double>;

/// Complex envelope on a uniform time grid (rotating frame at the carrier).
struct SampledSignal {
  TimeGrid grid;
  std::vector<Complex> samples;

  void validate() const;  // samples.size() == grid.count
};

/// Complex amplitude on the frequency grid paired with `grid`.
struct SpectrumSamples {
  TimeGrid grid;  ///< the paired time grid; frequencies via grid.freq(k)
  std::vector<Complex> samples;

  void validate() const;
};

double energy(const SampledSignal& s);    // sum |x|^2 * dt
double energy(const SpectrumSamples& s);  // sum |X|^2 * dw

/// Energy-weighted temporal centroid; requires nonzero energy.
double centroid(const SampledSignal& s);

/// Fraction of total energy in the final `window` fraction of the grid.
/// Discrete spectra are periodic in time, so output runs must leave this
/// tail empty; runs with tail_energy_fraction(out) > 1e-6 are flagged.
double tail_energy_fraction(const SampledSignal& s, double window = 0.05);

}  // namespace ringecho
