#pragma once

#include <functional>
#include <vector>

#include "ringecho/cavity.hpp"
#include "ringecho/signal.hpp"

namespace ringecho {

/// Output envelope at the reference plane just behind the last cavity:
/// synthesize(array_transfer * analyze(input)). The free-propagation phase
/// beyond the device is a pure delay and is dropped.
SampledSignal propagate(const ArraySpec& spec, const SampledSignal& input);

/// Per-cavity envelopes B_n(t) = synthesize(beta_n * U^(n-1) * analyze(input)).
std::vector<SampledSignal> cavity_amplitudes(const ArraySpec& spec,
                                             const SampledSignal& input);

/// Streaming variant: invokes fn(n, B_n) in cavity order without holding all
/// envelopes at once (one full-grid buffer per call).
void for_each_cavity_amplitude(
    const ArraySpec& spec, const SampledSignal& input,
    const std::function<void(int, const SampledSignal&)>& fn);

/// Occupations P_n(t) = |B_n(t)|^2.
std::vector<std::vector<double>> occupations(
    const std::vector<SampledSignal>& amplitudes);

}  // namespace ringecho
