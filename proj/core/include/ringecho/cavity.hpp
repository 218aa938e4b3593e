#pragma once

#include <vector>

namespace ringecho {

/// One ring resonator side-coupled to the common waveguide.
///
/// All rates are field (amplitude) rates in units where the input spectral
/// width is 1: the loaded half-linewidth of the resonance seen from the
/// waveguide is coupling/2 + linewidth.
struct CavityParams {
  double detuning = 0.0;   ///< resonance offset from the carrier
  double linewidth = 0.0;  ///< gamma: intrinsic half-width (field decay rate)
  double coupling = 0.0;   ///< kappa: waveguide coupling rate
  int index = 0;           ///< position along the waveguide

  /// Throws ValidationError for non-finite or negative rates, or for a
  /// totally decoupled lossless cavity (coupling + 2*linewidth == 0).
  void validate() const;
};

/// Ordered cavity array plus the comb descriptors shared by all engines.
///
/// comb_spacing == 0 with all detunings equal is the equal-frequency
/// (SCISSOR) configuration.
struct ArraySpec {
  std::vector<CavityParams> cavities;
  double comb_spacing = 0.0;       ///< Delta between adjacent resonances
  double propagation_delay = 0.0;  ///< inter-cavity waveguide delay (default 0)

  int count() const { return static_cast<int>(cavities.size()); }

  /// Delta / (2*gamma). Throws unless comb_spacing > 0 and the (uniform)
  /// linewidth is > 0.
  double finesse() const;

  bool scissor() const;
  double max_absolute_detuning() const;

  /// An empty array is a valid identity device; individual cavities must
  /// pass CavityParams::validate.
  void validate() const;
};

/// Builds a uniform comb of `count` cavities with detunings in arithmetic
/// progression of step `comb_spacing`. When `centered`, the comb straddles
/// the carrier: detuning_0 = -(count-1)*comb_spacing/2.
ArraySpec build_comb_array(int count, double comb_spacing, double linewidth,
                           double coupling, bool centered = true);

}  // namespace ringecho
