#include "ringecho/propagation.hpp"

#include "ringecho/fourier.hpp"
#include "ringecho/transfer.hpp"

namespace ringecho {

SampledSignal propagate(const ArraySpec& spec, const SampledSignal& input) {
  input.validate();
  spec.validate();
  if (spec.cavities.empty()) return input;

  SpectrumSamples spectrum = analyze(input);
  const TransferSamples transfer = array_transfer(spec, input.grid);
  for (std::size_t k = 0; k < spectrum.samples.size(); ++k) {
    spectrum.samples[k] *= transfer.values[k];
  }
  return synthesize(spectrum);
}

namespace detail {

// Streams B_n without materializing all prefix products: the running prefix
// U^(n-1) is folded into one buffer, one synthesis per cavity.
template <typename Fn>
void each_cavity_amplitude(const ArraySpec& spec, const SampledSignal& input,
                           Fn&& fn) {
  input.validate();
  spec.validate();
  const TimeGrid& grid = input.grid;
  const SpectrumSamples spectrum = analyze(input);

  std::vector<Complex> prefix(grid.count, Complex{1.0, 0.0});
  SpectrumSamples weighted;
  weighted.grid = grid;
  weighted.samples.assign(grid.count, Complex{});

  const double dw = grid.freq_step();
  const double half = static_cast<double>(grid.count / 2);
  for (int n = 0; n < spec.count(); ++n) {
    const CavityParams& c = spec.cavities[static_cast<std::size_t>(n)];
    for (std::size_t k = 0; k < grid.count; ++k) {
      const double w = (static_cast<double>(k) - half) * dw;
      weighted.samples[k] =
          internal_response(w, c) * prefix[k] * spectrum.samples[k];
    }
    fn(n, synthesize(weighted));
    if (n + 1 < spec.count()) {
      const double hop = n > 0 ? spec.propagation_delay : 0.0;
      for (std::size_t k = 0; k < grid.count; ++k) {
        const double w = (static_cast<double>(k) - half) * dw;
        Complex h = cavity_reflection(w, c);
        if (hop != 0.0) h *= std::polar(1.0, w * hop);
        prefix[k] *= h;
      }
    }
  }
}

}  // namespace detail

std::vector<SampledSignal> cavity_amplitudes(const ArraySpec& spec,
                                             const SampledSignal& input) {
  std::vector<SampledSignal> result;
  result.reserve(static_cast<std::size_t>(spec.count()));
  detail::each_cavity_amplitude(
      spec, input, [&](int, SampledSignal b) { result.push_back(std::move(b)); });
  return result;
}

void for_each_cavity_amplitude(
    const ArraySpec& spec, const SampledSignal& input,
    const std::function<void(int, const SampledSignal&)>& fn) {
  detail::each_cavity_amplitude(spec, input, fn);
}

std::vector<std::vector<double>> occupations(
    const std::vector<SampledSignal>& amplitudes) {
  std::vector<std::vector<double>> p;
  p.reserve(amplitudes.size());
  for (const auto& b : amplitudes) {
    std::vector<double> row(b.samples.size());
    for (std::size_t j = 0; j < b.samples.size(); ++j) {
      row[j] = std::norm(b.samples[j]);
    }
    p.push_back(std::move(row));
  }
  return p;
}

}  // namespace ringecho
