#pragma once

#include <span>

#include "ringecho/signal.hpp"

namespace ringecho {

// Unitary transform pair with the e^{-i w t} synthesis convention:
//
//   X(w) = dt/sqrt(2 pi) * sum_j x(t_j) e^{+i w t_j}
//   x(t) = dw/sqrt(2 pi) * sum_k X(w_k) e^{-i w_k t}
//
// The pair is exactly inverse on the grid (dw * dt * count = 2 pi) and
// Parseval holds exactly: sum |x|^2 dt = sum |X|^2 dw.

SpectrumSamples analyze(const SampledSignal& signal);
SampledSignal synthesize(const SpectrumSamples& spectrum);

namespace detail {
/// Raw in-place DFT, unnormalized: out[k] = sum_j in[j] e^{sign * 2 pi i jk/M}.
void fft_inplace(std::span<Complex> data, int sign);
}  // namespace detail

}  // namespace ringecho
