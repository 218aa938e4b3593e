#pragma once

#include <string>
#include <vector>

#include "ringecho/signal.hpp"

namespace ringecho {

struct EchoWindow {
  double t_lo = 0.0;
  double t_hi = 0.0;
};

struct EchoPeak {
  double peak_time = 0.0;       ///< energy-weighted centroid, relative to t_ref
  EchoWindow window;            ///< relative to t_ref
  double energy_fraction = 0.0; ///< window energy / input energy
  double fidelity = 0.0;        ///< shape overlap with the input, in [0,1]
};

/// Detected echo peaks plus the undelayed leakage near t = 0.
/// Serializes to one flat CSV row; see csv_header for the column order.
struct EchoReport {
  std::vector<EchoPeak> echoes;
  double transmitted_fraction = 0.0;
  double total_output_fraction = 0.0;

  static std::string csv_header(int echo_count);
  /// Pads or truncates to echo_count entries when echo_count >= 0.
  std::string csv_row(int echo_count = -1) const;
};

/// Energy retrieved inside [t_lo, t_hi) divided by the total input energy.
/// Window times are absolute grid times.
double efficiency(const SampledSignal& input, const SampledSignal& output,
                  EchoWindow window);

/// Echo detection for a comb of spacing `comb_spacing`: window k covers
/// [k - 1/2, k + 1/2] echo periods of 2*pi/spacing around t_ref (the input
/// center; inputs built by this library are centered at 0). The transmitted
/// window runs from the grid start to half a period. Requires spacing > 0.
EchoReport detect_echoes(const SampledSignal& output,
                         const SampledSignal& input, double comb_spacing,
                         int k_max, double t_ref = 0.0);

/// Largest-energy contiguous region above 1% of the peak intensity. Used for
/// delay and efficiency measurements on equal-frequency arrays, where there
/// is no comb period to window on.
EchoWindow dominant_window(const SampledSignal& s);

/// Difference of energy-weighted centroids, with the output restricted to
/// its dominant energy window. Requires output energy above 1e-6.
double delay_time(const SampledSignal& input, const SampledSignal& output);

/// Shape fidelity |<A_in(.-t*), A_out>|^2 / (|A_in|^2 |A_out,w|^2) maximized
/// over the shift t* (sub-sample refined); invariant under global phase and
/// amplitude scaling.
double fidelity(const SampledSignal& input, const SampledSignal& output,
                EchoWindow window);

}  // namespace ringecho
