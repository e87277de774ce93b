#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dense_operator.hpp"
#include "ket.hpp"
#include "types.hpp"

namespace qsv::zwm {

// Defined vacuum light speed, m/s.
inline constexpr double kSpeedOfLight = 299792458.0;

// Two down-converters pumped by one split beam.  The first converter's idler
// passes an attenuator (transmit/block amplitudes) and is aligned with the
// second converter's idler; the two signal beams meet at one detector.
struct ZwmConfig {
  Complex g1;             // converter couplings
  Complex g2;
  Complex v1;             // pump amplitudes at the conversion times
  Complex v2;
  Complex transmit;       // attenuator amplitudes, |T|^2 + |B|^2 = 1
  Complex block;
  double omega_i = 0.0;   // idler angular frequency, rad/s
  double d12 = 0.0;       // converter separation, m
  double t1 = 0.0;        // conversion times, s
  double t2 = 0.0;
  double theta1 = 0.0;    // signal path phases to the detector, rad
  double theta2 = 0.0;
};

// Throws InvalidArgument on hard violations (non-finite fields, negative
// omega/distance, attenuator not unit, first-order amplitude above 0.3).
// Returns warnings for amplitudes above 0.1, where the first-order
// truncation starts to degrade.
std::vector<std::string> validate(const ZwmConfig& cfg);

// Occupation labels over the idler, signal-1 and signal-2 modes: vacuum,
// transmitted pair, blocked signal, second-converter pair.  There is no
// label pairing a first-converter idler with a second-converter signal.
BasisPtr state_basis();

// state_basis plus the bare-idler label reached by signal annihilation.
BasisPtr detector_basis();

// e^{i omega_i [(t2 - t1) - d12/c]}, the first idler's phase at the second
// converter relative to production.
Complex idler_phase(const ZwmConfig& cfg);

// First-order term amplitudes before normalization; vacuum carries 1.
struct Amplitudes {
  Complex vacuum;
  Complex transmitted;
  Complex blocked;
  Complex converter2;
};

Amplitudes raw_amplitudes(const ZwmConfig& cfg);

// Normalized four-label state.
Ket build_state(const ZwmConfig& cfg);

// E+ = a_s1 e^{i theta1} + a_s2 e^{i theta2} over detector_basis.
Operator signal_annihilator(const ZwmConfig& cfg);

// Argument of the interference cosine.
double fringe_phase(const ZwmConfig& cfg);

// Detector intensity <psi| E- E+ |psi> for the unnormalized state:
// closed form and the literal operator evaluation.
double signal_intensity(const ZwmConfig& cfg);
double signal_intensity_operator(const ZwmConfig& cfg);

// (I_max - I_min) / (I_max + I_min); grows linearly with |T|.  Throws when
// both coupling products vanish.
double visibility(const ZwmConfig& cfg);

// Intensity with theta2 shifted by each offset.
std::vector<std::pair<double, double>> scan_intensity(
    const ZwmConfig& cfg, const std::vector<double>& phase_offsets);

// Lower bound on the delay between changing the attenuator and seeing the
// fringe respond: attenuator -> second converter -> detector at light speed.
// The sum is carried in extended precision so the result is the correctly
// rounded quotient.
double min_time_lag(double d_attenuator_to_dc2, double d_dc2_to_detector);

}  // namespace qsv::zwm
