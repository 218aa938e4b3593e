#include "ringecho/dynamics.hpp"

#include <cmath>
#include <string>

#include "ringecho/errors.hpp"

namespace ringecho {

double FrequencySchedule::detuning_at(double base_detuning, double t) const {
  if (!active()) return base_detuning;
  if (t < freeze_on) return base_detuning;
  if (ramp > 0.0 && t < freeze_on + ramp) {
    const double s = (t - freeze_on) / ramp;
    return base_detuning + s * (frozen_detuning - base_detuning);
  }
  if (t < freeze_off) return frozen_detuning;
  if (ramp > 0.0 && t < freeze_off + ramp) {
    const double s = (t - freeze_off) / ramp;
    return frozen_detuning + s * (base_detuning - frozen_detuning);
  }
  return base_detuning;
}

void FrequencySchedule::validate() const {
  if (!std::isfinite(freeze_on) || !std::isfinite(freeze_off) ||
      !std::isfinite(ramp) || !std::isfinite(frozen_detuning)) {
    throw ValidationError("schedule: non-finite parameter");
  }
  if (freeze_off < freeze_on) {
    throw ValidationError("schedule: freeze_off before freeze_on");
  }
  if (ramp < 0.0) throw ValidationError("schedule: negative ramp");
}

FrequencySchedule build_freeze_schedule(const ArraySpec& spec, double t_on,
                                        double t_off, double ramp) {
  spec.validate();
  if (spec.cavities.empty()) {
    throw ValidationError("build_freeze_schedule: empty array");
  }
  FrequencySchedule sched;
  sched.freeze_on = t_on;
  sched.freeze_off = t_off;
  sched.ramp = ramp;
  double mean = 0.0;
  for (const auto& c : spec.cavities) mean += c.detuning;
  sched.frozen_detuning = mean / static_cast<double>(spec.cavities.size());
  sched.validate();
  return sched;
}

namespace {

struct CascadeConstants {
  std::vector<double> damping;    // kappa/2 + gamma
  std::vector<double> sqrt_kappa;
  std::vector<double> base_detuning;
};

// One evaluation of the coupled right-hand side. The cascade is resolved
// algebraically in cavity order: a_out,n = a_in,n - sqrt(kappa) b_n feeds the
// next cavity. Returns the waveguide amplitude behind the last cavity.
Complex cascade_rhs(const CascadeConstants& cc, const Complex* b, Complex a,
                    const double* detuning, Complex* db) {
  const std::size_t n = cc.damping.size();
  for (std::size_t i = 0; i < n; ++i) {
    db[i] = Complex(-cc.damping[i], -detuning[i]) * b[i] + cc.sqrt_kappa[i] * a;
    a -= cc.sqrt_kappa[i] * b[i];
  }
  return a;
}

Complex cascade_output(const CascadeConstants& cc, const Complex* b, Complex a) {
  const std::size_t n = cc.damping.size();
  for (std::size_t i = 0; i < n; ++i) a -= cc.sqrt_kappa[i] * b[i];
  return a;
}

// Four-point half-sample interpolator, exact for cubics.
Complex half_sample(const std::vector<Complex>& x, std::size_t j) {
  const std::size_t m = x.size();
  const Complex xm1 = j >= 1 ? x[j - 1] : Complex{};
  const Complex x0 = x[j];
  const Complex x1 = j + 1 < m ? x[j + 1] : Complex{};
  const Complex x2 = j + 2 < m ? x[j + 2] : Complex{};
  return (-xm1 + 9.0 * x0 + 9.0 * x1 - x2) / 16.0;
}

}  // namespace

IntegrationResult integrate(const ArraySpec& spec, const SampledSignal& input,
                            const FrequencySchedule* schedule,
                            bool keep_amplitudes) {
  input.validate();
  spec.validate();
  if (spec.propagation_delay != 0.0) {
    throw ValidationError(
        "integrate: nonzero propagation delay is not supported");
  }
  const TimeGrid& grid = input.grid;
  const std::size_t n = spec.cavities.size();
  const std::size_t m = grid.count;
  const double dt = grid.step;

  double max_rate = 0.0;
  for (const auto& c : spec.cavities) {
    max_rate = std::max(max_rate,
                        0.5 * c.coupling + c.linewidth + std::abs(c.detuning));
  }
  if (max_rate > 0.0 && dt > 0.1 / max_rate) {
    throw ValidationError("integrate: step " + std::to_string(dt) +
                          " exceeds 0.1/max rate = " +
                          std::to_string(0.1 / max_rate));
  }
  if (schedule != nullptr && schedule->active()) {
    schedule->validate();
    if (schedule->freeze_on < grid.start ||
        schedule->freeze_off + schedule->ramp > grid.end()) {
      throw ValidationError("integrate: schedule window outside the grid span");
    }
  }
  if (keep_amplitudes && n * m > (std::size_t{1} << 25)) {
    throw ResourceError("integrate: amplitude storage over the budget");
  }

  CascadeConstants cc;
  cc.damping.reserve(n);
  cc.sqrt_kappa.reserve(n);
  cc.base_detuning.reserve(n);
  for (const auto& c : spec.cavities) {
    cc.damping.push_back(0.5 * c.coupling + c.linewidth);
    cc.sqrt_kappa.push_back(std::sqrt(c.coupling));
    cc.base_detuning.push_back(c.detuning);
  }

  IntegrationResult result;
  result.output.grid = grid;
  result.output.samples.assign(m, Complex{});
  result.total_occupation.assign(m, 0.0);
  if (keep_amplitudes) {
    result.amplitudes.assign(n, SampledSignal{grid, std::vector<Complex>(m)});
  }

  std::vector<Complex> b(n), k1(n), k2(n), k3(n), k4(n), bt(n);
  std::vector<double> d0(n), dh(n), d1(n);
  const bool scheduled = schedule != nullptr && schedule->active();
  auto fill_detunings = [&](double t, std::vector<double>& out) {
    for (std::size_t i = 0; i < n; ++i) {
      out[i] = schedule->detuning_at(cc.base_detuning[i], t);
    }
  };
  if (!scheduled) {
    d0 = cc.base_detuning;
    dh = cc.base_detuning;
    d1 = cc.base_detuning;
  }

  const std::vector<Complex>& x = input.samples;
  for (std::size_t j = 0; j < m; ++j) {
    const double t = grid.time(j);
    if (scheduled) fill_detunings(t, d0);

    double occ = 0.0;
    for (const auto& v : b) occ += std::norm(v);
    if (!std::isfinite(occ)) {
      throw IntegrationError("integrate: non-finite state", t);
    }
    result.total_occupation[j] = occ;
    result.output.samples[j] = cascade_output(cc, b.data(), x[j]);
    if (keep_amplitudes) {
      for (std::size_t i = 0; i < n; ++i) result.amplitudes[i].samples[j] = b[i];
    }
    if (j + 1 == m) break;

    if (scheduled) {
      fill_detunings(t + 0.5 * dt, dh);
      fill_detunings(t + dt, d1);
    }
    const Complex xh = half_sample(x, j);
    const Complex x1 = x[j + 1];

    cascade_rhs(cc, b.data(), x[j], d0.data(), k1.data());
    for (std::size_t i = 0; i < n; ++i) bt[i] = b[i] + 0.5 * dt * k1[i];
    cascade_rhs(cc, bt.data(), xh, dh.data(), k2.data());
    for (std::size_t i = 0; i < n; ++i) bt[i] = b[i] + 0.5 * dt * k2[i];
    cascade_rhs(cc, bt.data(), xh, dh.data(), k3.data());
    for (std::size_t i = 0; i < n; ++i) bt[i] = b[i] + dt * k3[i];
    cascade_rhs(cc, bt.data(), x1, d1.data(), k4.data());
    for (std::size_t i = 0; i < n; ++i) {
      b[i] += dt / 6.0 * (k1[i] + 2.0 * (k2[i] + k3[i]) + k4[i]);
    }
  }
  return result;
}

}  // namespace ringecho
