#include "ringecho/transfer.hpp"

#include <cassert>
#include <cmath>

#include "ringecho/errors.hpp"

namespace ringecho {

Complex cavity_reflection(double omega, const CavityParams& c) {
  const double x = omega - c.detuning;
  const double a = 0.5 * c.coupling - c.linewidth;
  const double b = 0.5 * c.coupling + c.linewidth;
  // -(a + i x) / (b - i x), rationalized
  const double inv = 1.0 / (b * b + x * x);
  return Complex(-(a * b - x * x) * inv, -x * (a + b) * inv);
}

Complex internal_response(double omega, const CavityParams& c) {
  if (c.coupling == 0.0) return Complex{};
  const double x = omega - c.detuning;
  const double b = 0.5 * c.coupling + c.linewidth;
  const double inv = std::sqrt(c.coupling) / (b * b + x * x);
  return Complex(b * inv, x * inv);
}

namespace {

void multiply_stage(std::vector<Complex>& values, const TimeGrid& grid,
                    const CavityParams& c, double hop_phase) {
  const double a = 0.5 * c.coupling - c.linewidth;
  const double b = 0.5 * c.coupling + c.linewidth;
  const std::size_t m = grid.count;
  const double dw = grid.freq_step();
  const double half = static_cast<double>(m / 2);
  for (std::size_t k = 0; k < m; ++k) {
    const double w = (static_cast<double>(k) - half) * dw;
    const double x = w - c.detuning;
    const double inv = 1.0 / (b * b + x * x);
    Complex h(-(a * b - x * x) * inv, -x * (a + b) * inv);
    assert(std::norm(h) <= 1.0 + 1e-12);
    if (hop_phase != 0.0) h *= std::polar(1.0, w * hop_phase);
    values[k] *= h;
  }
}

}  // namespace

TransferSamples array_transfer(const ArraySpec& spec, const TimeGrid& grid) {
  grid.validate();
  spec.validate();
  TransferSamples out;
  out.grid = grid;
  out.stage = spec.count();
  out.values.assign(grid.count, Complex{1.0, 0.0});
  for (int n = 0; n < spec.count(); ++n) {
    // e^{i w tau (m-1)} in total: one hop before every cavity after the first
    const double hop = n > 0 ? spec.propagation_delay : 0.0;
    multiply_stage(out.values, grid, spec.cavities[static_cast<std::size_t>(n)],
                   hop);
  }
  return out;
}

std::vector<TransferSamples> prefix_transfers(const ArraySpec& spec,
                                              const TimeGrid& grid) {
  grid.validate();
  spec.validate();
  std::vector<TransferSamples> stages;
  stages.reserve(static_cast<std::size_t>(spec.count()));
  TransferSamples acc;
  acc.grid = grid;
  acc.stage = 0;
  acc.values.assign(grid.count, Complex{1.0, 0.0});
  stages.push_back(acc);
  for (int n = 0; n + 1 < spec.count(); ++n) {
    const double hop = n > 0 ? spec.propagation_delay : 0.0;
    multiply_stage(acc.values, grid, spec.cavities[static_cast<std::size_t>(n)],
                   hop);
    acc.stage = n + 1;
    stages.push_back(acc);
  }
  return stages;
}

}  // namespace ringecho
