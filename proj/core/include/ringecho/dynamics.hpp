#pragma once

#include <vector>

#include "ringecho/cavity.hpp"
#include "ringecho/signal.hpp"

namespace ringecho {

/// Piecewise-linear detuning schedule: every cavity ramps from its base
/// detuning to a common frozen value over [freeze_on, freeze_on + ramp],
/// holds it until freeze_off, and ramps back over [freeze_off,
/// freeze_off + ramp]. freeze_off == freeze_on disables the schedule.
struct FrequencySchedule {
  double freeze_on = 0.0;
  double freeze_off = 0.0;
  double ramp = 0.0;
  double frozen_detuning = 0.0;

  bool active() const { return freeze_off > freeze_on; }
  double detuning_at(double base_detuning, double t) const;
  void validate() const;
};

/// Schedule equalizing all detunings to the comb center over `ramp`.
FrequencySchedule build_freeze_schedule(const ArraySpec& spec, double t_on,
                                        double t_off, double ramp = 0.0);

struct IntegrationResult {
  SampledSignal output;
  std::vector<SampledSignal> amplitudes;    ///< filled when keep_amplitudes
  std::vector<double> total_occupation;     ///< sum_n |b_n(t_j)|^2
};

/// Direct time-domain integration of the cascaded cavity equations
///
///   db_n/dt = -(i d_n(t) + kappa/2 + gamma) b_n + sqrt(kappa) a_in,n
///   a_out,n = a_in,n - sqrt(kappa) b_n,   a_in,n+1 = a_out,n
///
/// with classic fourth-order Runge-Kutta steps of size grid.step. The cascade
/// is resolved algebraically in cavity order (zero inter-cavity delay), and
/// input values between samples come from cubic interpolation of the complex
/// envelope, which preserves the fourth-order accuracy.
///
/// Preconditions: grid.step <= 0.1 / max(kappa/2 + gamma + |detuning|) over
/// the cavities, and propagation_delay == 0. A schedule, when given, must lie
/// inside the grid span. Non-finite states raise IntegrationError with the
/// offending time.
IntegrationResult integrate(const ArraySpec& spec, const SampledSignal& input,
                            const FrequencySchedule* schedule = nullptr,
                            bool keep_amplitudes = false);

}  // namespace ringecho
