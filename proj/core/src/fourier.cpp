#include "ringecho/fourier.hpp"

#include <fftw3.h>

#include <mutex>

#include "ringecho/errors.hpp"

namespace ringecho {

namespace {

std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

// Multiplies data[k] by e^{i sign (k - M/2) phase_step}. The rotation is
// accumulated multiplicatively and re-anchored every block to keep the phase
// error at a few ulps regardless of length.
void apply_linear_phase(std::span<Complex> data, double phase_step, int sign) {
  if (phase_step == 0.0) return;
  const std::size_t m = data.size();
  const double s = sign > 0 ? 1.0 : -1.0;
  constexpr std::size_t kBlock = 256;
  const Complex step = std::polar(1.0, s * phase_step);
  const double half = static_cast<double>(m / 2);
  for (std::size_t k0 = 0; k0 < m; k0 += kBlock) {
    Complex rot =
        std::polar(1.0, s * (static_cast<double>(k0) - half) * phase_step);
    const std::size_t k1 = std::min(m, k0 + kBlock);
    for (std::size_t k = k0; k < k1; ++k) {
      data[k] *= rot;
      rot *= step;
    }
  }
}

void alternate_signs(std::span<Complex> data) {
  for (std::size_t j = 1; j < data.size(); j += 2) data[j] = -data[j];
}

}  // namespace

namespace detail {

void fft_inplace(std::span<Complex> data, int sign) {
  auto* ptr = reinterpret_cast<fftw_complex*>(data.data());
  fftw_plan plan = nullptr;
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    plan = fftw_plan_dft_1d(static_cast<int>(data.size()), ptr, ptr,
                            sign > 0 ? FFTW_BACKWARD : FFTW_FORWARD,
                            FFTW_ESTIMATE);
  }
  if (plan == nullptr) {
    throw ResourceError("fft: planning failed for size " +
                        std::to_string(data.size()));
  }
  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(plan);
  }
}

}  // namespace detail

SpectrumSamples analyze(const SampledSignal& signal) {
  signal.validate();
  const TimeGrid& g = signal.grid;
  SpectrumSamples out;
  out.grid = g;
  out.samples = signal.samples;

  // X_k = dt/sqrt(2 pi) e^{i w_k t0} sum_j x_j (-1)^j e^{+2 pi i jk/M}
  alternate_signs(out.samples);
  detail::fft_inplace(out.samples, +1);
  apply_linear_phase(out.samples, g.freq_step() * g.start, +1);
  const double scale = g.step / std::sqrt(2.0 * std::numbers::pi);
  for (auto& v : out.samples) v *= scale;
  return out;
}

SampledSignal synthesize(const SpectrumSamples& spectrum) {
  spectrum.validate();
  const TimeGrid& g = spectrum.grid;
  SampledSignal out;
  out.grid = g;
  out.samples = spectrum.samples;

  // x_j = dw/sqrt(2 pi) (-1)^j sum_k (X_k e^{-i w_k t0}) e^{-2 pi i kj/M}
  apply_linear_phase(out.samples, g.freq_step() * g.start, -1);
  detail::fft_inplace(out.samples, -1);
  alternate_signs(out.samples);
  const double scale = g.freq_step() / std::sqrt(2.0 * std::numbers::pi);
  for (auto& v : out.samples) v *= scale;
  return out;
}

}  // namespace ringecho
