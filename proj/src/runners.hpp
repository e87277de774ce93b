#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <string>

#include "cat_eraser.hpp"
#include "direction.hpp"
#include "photo.hpp"
#include "tolerances.hpp"
#include "zwm.hpp"

namespace qsv::runners {

// Each runner renders one subcommand's full report as a string.  Output is a
// pure function of the parameters, so identical inputs yield identical bytes.

struct BellParams {
  Direction a = Direction::plus_z();
  Direction b = Direction::plus_z();
};

std::string run_bell(const BellParams& p);

struct CatParams {
  cat_eraser::CatPhases phases;
};

std::string run_cat(const CatParams& p);

std::string run_eraser();

std::string run_ghz_check();

struct GhzSetParams {
  double theta_i = M_PI / 3.0;
  double theta_j = M_PI / 3.0;
  std::array<int, 3> poles = {1, 1, -1};
  double epsilon = 1e-6;
  std::uint64_t samples = 10000;
  std::uint64_t seed = 0;
  double check_tol = kCheckTol;
  std::size_t map_theta_steps = 121;  // region-map CSV resolution
  std::size_t map_phi_steps = 8;
};

std::string run_ghz_set(const GhzSetParams& p);
std::string run_ghz_set_csv(const GhzSetParams& p);

struct ZwmParams {
  zwm::ZwmConfig cfg;
  double d_attenuator_to_dc2 = 0.3;
  double d_dc2_to_detector = 0.6;
  std::size_t scan_points = 64;
};

// Flag-friendly defaults: equal couplings, balanced attenuator.
ZwmParams default_zwm_params();

std::string run_zwm(const ZwmParams& p);
std::string run_zwm_csv(const ZwmParams& p);

struct PhotoParams {
  photo::PhotoConfig cfg{Complex(1.0, 0.0), Complex(1.0, 0.0),
                         Complex(1.0, 0.0), Complex(1.0, 0.0),
                         Complex(1.0, 0.0)};
  double phi = 0.0;
};

std::string run_photo(const PhotoParams& p);

}  // namespace qsv::runners
