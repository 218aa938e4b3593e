#include "ringecho/signal.hpp"

#include "ringecho/errors.hpp"

namespace ringecho {

void SampledSignal::validate() const {
  grid.validate();
  if (samples.size() != grid.count) {
    throw ValidationError("signal: sample count does not match the grid");
  }
}

void SpectrumSamples::validate() const {
  grid.validate();
  if (samples.size() != grid.count) {
    throw ValidationError("spectrum: sample count does not match the grid");
  }
}

double energy(const SampledSignal& s) {
  double acc = 0.0;
  for (const auto& v : s.samples) acc += std::norm(v);
  return acc * s.grid.step;
}

double energy(const SpectrumSamples& s) {
  double acc = 0.0;
  for (const auto& v : s.samples) acc += std::norm(v);
  return acc * s.grid.freq_step();
}

double centroid(const SampledSignal& s) {
  double w = 0.0;
  double tw = 0.0;
  for (std::size_t j = 0; j < s.samples.size(); ++j) {
    const double p = std::norm(s.samples[j]);
    w += p;
    tw += p * s.grid.time(j);
  }
  if (w <= 0.0) throw ValidationError("centroid: signal has no energy");
  return tw / w;
}

double tail_energy_fraction(const SampledSignal& s, double window) {
  const std::size_t first =
      static_cast<std::size_t>((1.0 - window) * static_cast<double>(s.grid.count));
  double tail = 0.0;
  double total = 0.0;
  for (std::size_t j = 0; j < s.samples.size(); ++j) {
    const double p = std::norm(s.samples[j]);
    total += p;
    if (j >= first) tail += p;
  }
  return total > 0.0 ? tail / total : 0.0;
}

}  // namespace ringecho
