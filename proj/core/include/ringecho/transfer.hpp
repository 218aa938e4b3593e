#pragma once

#include <vector>

#include "ringecho/cavity.hpp"
#include "ringecho/signal.hpp"

namespace ringecho {

/// Frequency response of the first `stage` cavities over a detuning grid.
struct TransferSamples {
  TimeGrid grid;  ///< paired time grid; sample k sits at grid.freq(k)
  int stage = 0;  ///< number of cavities included in the product
  std::vector<Complex> values;
};

/// Single-cavity reflection coefficient
///
///   H(w) = -(kappa/2 - gamma - i (d - w)) / (kappa/2 + gamma + i (d - w)).
///
/// Lossless cavities flip the phase on resonance (H = -1) and are transparent
/// far off resonance (H -> +1); |H| <= 1 whenever gamma >= 0. Critical
/// coupling kappa = 2*gamma gives H = 0 on resonance.
Complex cavity_reflection(double omega, const CavityParams& c);

/// Intracavity response beta(w) = sqrt(kappa) / (kappa/2 + gamma + i (d - w)).
/// |beta| peaks on resonance at sqrt(kappa)/(kappa/2 + gamma).
Complex internal_response(double omega, const CavityParams& c);

/// Product of all cavity reflections plus the inter-cavity phase
/// e^{i w tau_prop (m-1)}; the output is invariant under cavity reordering
/// when the propagation delay is uniform.
TransferSamples array_transfer(const ArraySpec& spec, const TimeGrid& grid);

/// Prefix products for stages 0..N-1 (stage 0 is identically 1). Intended
/// for moderate grids; the propagation module streams the prefix instead.
std::vector<TransferSamples> prefix_transfers(const ArraySpec& spec,
                                              const TimeGrid& grid);

}  // namespace ringecho
