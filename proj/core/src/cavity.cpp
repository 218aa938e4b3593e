#include "ringecho/cavity.hpp"

#include <cmath>
#include <string>

#include "ringecho/errors.hpp"

namespace ringecho {

void CavityParams::validate() const {
  if (!std::isfinite(detuning) || !std::isfinite(linewidth) ||
      !std::isfinite(coupling)) {
    throw ValidationError("cavity " + std::to_string(index) +
                          ": non-finite parameter");
  }
  if (linewidth < 0.0) {
    throw ValidationError("cavity " + std::to_string(index) +
                          ": negative linewidth");
  }
  if (coupling < 0.0) {
    throw ValidationError("cavity " + std::to_string(index) +
                          ": negative coupling");
  }
  if (coupling + 2.0 * linewidth <= 0.0) {
    throw ValidationError("cavity " + std::to_string(index) +
                          ": totally decoupled lossless cavity");
  }
}

double ArraySpec::finesse() const {
  if (comb_spacing <= 0.0) {
    throw ValidationError("finesse undefined: comb spacing is not positive");
  }
  if (cavities.empty()) {
    throw ValidationError("finesse undefined: empty array");
  }
  const double gamma = cavities.front().linewidth;
  for (const auto& c : cavities) {
    if (c.linewidth != gamma) {
      throw ValidationError("finesse undefined: non-uniform linewidth");
    }
  }
  if (gamma <= 0.0) {
    throw ValidationError("finesse undefined: linewidth is not positive");
  }
  return comb_spacing / (2.0 * gamma);
}

bool ArraySpec::scissor() const {
  if (comb_spacing != 0.0 || cavities.empty()) return false;
  const double d = cavities.front().detuning;
  for (const auto& c : cavities) {
    if (c.detuning != d) return false;
  }
  return true;
}

double ArraySpec::max_absolute_detuning() const {
  double m = 0.0;
  for (const auto& c : cavities) m = std::max(m, std::abs(c.detuning));
  return m;
}

void ArraySpec::validate() const {
  if (!std::isfinite(comb_spacing) || comb_spacing < 0.0) {
    throw ValidationError("array: comb spacing must be finite and >= 0");
  }
  if (!std::isfinite(propagation_delay) || propagation_delay < 0.0) {
    throw ValidationError("array: propagation delay must be finite and >= 0");
  }
  for (const auto& c : cavities) c.validate();
}

ArraySpec build_comb_array(int count, double comb_spacing, double linewidth,
                           double coupling, bool centered) {
  if (count < 1) throw ValidationError("build_comb_array: count must be >= 1");
  if (!std::isfinite(comb_spacing) || comb_spacing < 0.0) {
    throw ValidationError("build_comb_array: comb spacing must be >= 0");
  }
  ArraySpec spec;
  spec.comb_spacing = comb_spacing;
  spec.cavities.reserve(static_cast<std::size_t>(count));
  const double base = centered ? -0.5 * (count - 1) * comb_spacing : 0.0;
  for (int n = 0; n < count; ++n) {
    CavityParams c;
    c.detuning = base + n * comb_spacing;
    c.linewidth = linewidth;
    c.coupling = coupling;
    c.index = n;
    c.validate();
    spec.cavities.push_back(c);
  }
  spec.validate();
  return spec;
}

}  // namespace ringecho
