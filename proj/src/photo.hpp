#pragma once

#include <array>

#include "dense_operator.hpp"
#include "ket.hpp"
#include "types.hpp"

namespace qsv::photo {

// Two-site metal toy: a photon arriving at +x or -x is either left alone,
// absorbed to free a photoelectron, or absorbed to produce something else.
struct PhotoConfig {
  Complex a;        // non-disturbance amplitude, shared by both sites
  Complex b_plus;   // photoelectron amplitudes
  Complex b_minus;
  Complex c_plus;   // other-outcome amplitudes
  Complex c_minus;
};

// Throws InvalidArgument on non-finite fields or the all-zero config.
void validate(const PhotoConfig& cfg);

enum Slot : std::size_t {
  kPhotonPlus = 0,
  kPhotonMinus = 1,
  kElectronPlus = 2,
  kElectronMinus = 3,
  kOtherPlus = 4,
  kOtherMinus = 5,
};

// Single-excitation labels in Slot order.
BasisPtr photo_basis();

// Scattering operator: photon@s -> a photon@s + b_s electron@s + c_s other@s,
// electron@s -> a electron@s - b_s* photon@s, other@s -> a other@s - c_s*
// photon@s; no cross-site terms.  The whole matrix carries one scalar
// 1/sqrt(|a|^2 + sum |b|^2 + sum |c|^2); relative amplitudes are the
// physical content and every output ket is renormalized downstream.
Operator build_photo_s(const PhotoConfig& cfg);

// (e^{+i phi} photon@+x + e^{-i phi} photon@-x)/sqrt(2): one dim photon
// spread evenly over the metal.
Ket uniform_illumination(double phi);

// S applied to the uniform state, renormalized.
Ket evolve_uniform(const PhotoConfig& cfg, double phi);

// site: +1 for +x, -1 for -x.
Ket local_electron(int site);

// Adjoint image of a freed electron, renormalized: supported on the same
// site only, photon:electron ratio b_site* : a*.  Throws when the electron
// couples to nothing (a = b_site = 0).
Ket pre_image_of_local_electron(const PhotoConfig& cfg, int site);

// Site splits are conditional probabilities within one outcome category;
// an empty category reports (0, 0).
struct UniformityReport {
  std::array<double, 2> photon_split;    // (+x, -x)
  std::array<double, 2> electron_split;
  std::array<double, 2> other_split;
  double pre_image_same_site_fraction_plus;
  double pre_image_same_site_fraction_minus;
};

// Requires a site-symmetric config (|b+| = |b-|, |c+| = |c-|); rejects
// others, since uniform splits are only claimed for symmetric metals.
UniformityReport uniformity_report(const PhotoConfig& cfg, double phi);

}  // namespace qsv::photo
