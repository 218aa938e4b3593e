#pragma once

#include <span>
#include <string>
#include <vector>

#include "ringecho/cavity.hpp"

namespace ringecho {

/// Physical microresonator parameters. `intrinsic_rate` is the field
/// half-width in rad/s, related to the intrinsic quality factor by
/// Q = carrier / (2 * intrinsic_rate); the equivalent intensity decay rate
/// is carrier / Q. Constructing with both values checks that relation to
/// 1e-6 relative and records the outcome in q_rate_consistent instead of
/// rejecting the input.
struct PhysicalCavity {
  double carrier = 0.0;             ///< omega_0, rad/s
  double wavelength = 0.0;          ///< m
  double diameter = 0.0;            ///< m
  double free_spectral_range = 0.0; ///< rad/s
  double quality = 0.0;             ///< intrinsic Q
  double intrinsic_rate = 0.0;      ///< gamma_phys, field half-width, rad/s
  bool q_rate_consistent = true;

  static PhysicalCavity from_quality(double carrier, double wavelength,
                                     double diameter, double fsr,
                                     double quality);
  static PhysicalCavity from_rate(double carrier, double wavelength,
                                  double diameter, double fsr,
                                  double intrinsic_rate);
  static PhysicalCavity from_both(double carrier, double wavelength,
                                  double diameter, double fsr, double quality,
                                  double intrinsic_rate);
  void validate() const;
};

/// Normalized-unit seed: the model array in units where the input spectral
/// width is 1, plus the scale mapping normalized time u to u * time_scale
/// seconds.
struct NormalizedSeed {
  ArraySpec array;
  double time_scale = 0.0;           ///< seconds per normalized time unit
  double spectral_width_phys = 0.0;  ///< 1 / pulse duration, rad/s
  double comb_spacing_phys = 0.0;    ///< rad/s
  double coupling_phys = 0.0;        ///< coupling half-linewidth, rad/s
};

/// Maps physical parameters to the normalized array. `width_to_spacing` is
/// the ratio of the input spectral width to the comb spacing (10 for the
/// standard configuration); `coupling_to_spacing` is the coupling
/// half-linewidth over the comb spacing. Rejects combs wider than one free
/// spectral range.
NormalizedSeed to_normalized(const PhysicalCavity& p, int count,
                             double pulse_duration_s, double width_to_spacing,
                             double coupling_to_spacing = 0.5);

/// Diameter decrement that shifts one resonance by one comb spacing:
/// spacing * diameter / carrier.
double diameter_step(const PhysicalCavity& p, double comb_spacing_phys);

/// Largest spacing fitting `count` resonances within one free spectral range.
double max_comb_spacing(const PhysicalCavity& p, int count);

enum class Scheme { crc, scissor };

struct DelayTableRow {
  double quality = 0.0;           ///< reported alongside the result
  double pulse_duration_s = 0.0;  ///< t_s; the spectral width is 1/t_s
  double finesse = 500.0;         ///< comb spacing over intensity decay rate
  Scheme scheme = Scheme::crc;
};

struct DelayTableEntry {
  DelayTableRow row;
  double delay_normalized = 0.0;
  double delay_s = 0.0;
  double eta = 0.0;
  double window_lo = 0.0;        ///< efficiency window used, normalized
  double window_hi = 0.0;
  double fiber_transit_s = 0.0;  ///< additive inter-cavity transit, reported separately
};

struct DelayTableOptions {
  int count = 61;
  double width_to_spacing = 10.0;  ///< input width / comb spacing for crc rows
  double coupling_crc = 0.05;      ///< coupling half-linewidth / input width
  double coupling_scissor = 7.5;
  double scissor_loss = 1e-4;      ///< intensity decay rate / input width
  double cavity_spacing_m = 100e-6;
  double fiber_index = 1.5;
};

/// Runs the normalized scenario for each row and converts the measured delay
/// and retrieval efficiency to physical units. Delays come from simulation,
/// not from evaluating 2*pi/spacing. Rows sharing a scheme and finesse reuse
/// one normalized run.
std::vector<DelayTableEntry> table_delays(std::span<const DelayTableRow> rows,
                                          const DelayTableOptions& options = {});

std::string delay_table_csv(std::span<const DelayTableEntry> entries);

/// The standard row sets: an 8-cell scheme comparison at finesse 500, and a
/// 4-cell low-finesse set (F = 10, 3).
std::vector<DelayTableRow> delay_table_rows_schemes();
std::vector<DelayTableRow> delay_table_rows_low_finesse();

}  // namespace ringecho
