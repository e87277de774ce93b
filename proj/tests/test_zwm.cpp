#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "rng.hpp"
#include "zwm.hpp"

using namespace qsv;
using namespace qsv::zwm;

namespace {

ZwmConfig sample_config() {
  ZwmConfig cfg;
  cfg.g1 = Complex(0.04, 0.02);
  cfg.g2 = Complex(0.05, -0.01);
  cfg.v1 = Complex(0.9, 0.1);
  cfg.v2 = Complex(0.8, -0.3);
  cfg.transmit = std::polar(std::sqrt(0.7), 0.4);
  cfg.block = std::polar(std::sqrt(0.3), -1.1);
  cfg.omega_i = 2.0e5;
  cfg.d12 = 25.0;
  cfg.t1 = 1e-7;
  cfg.t2 = 5e-7;
  cfg.theta1 = 0.3;
  cfg.theta2 = 1.4;
  return cfg;
}

}  // namespace

TEST_CASE("validation enforces the physical regime") {
  ZwmConfig cfg = sample_config();
  CHECK(validate(cfg).empty());

  ZwmConfig bad = cfg;
  bad.transmit = Complex(1.0, 0.0);  // |T|^2 + |B|^2 = 1.3
  CHECK_THROWS_AS(validate(bad), InvalidArgument);

  bad = cfg;
  bad.g1 = Complex(0.5, 0.0);
  bad.v1 = Complex(1.0, 0.0);
  CHECK_THROWS_AS(validate(bad), InvalidArgument);

  bad = cfg;
  bad.omega_i = -1.0;
  CHECK_THROWS_AS(validate(bad), InvalidArgument);

  // Amplitudes between 0.1 and 0.3 pass with a warning.
  ZwmConfig warn = cfg;
  warn.g1 = Complex(0.2, 0.0);
  warn.v1 = Complex(1.0, 0.0);
  CHECK(validate(warn).size() == 1);
}

TEST_CASE("raw amplitudes compose coupling, pump, phase and attenuator") {
  const ZwmConfig cfg = sample_config();
  const Complex phase = std::polar(
      1.0, cfg.omega_i * ((cfg.t2 - cfg.t1) - cfg.d12 / kSpeedOfLight));
  const Complex first = cfg.g1 * cfg.v1 * phase;
  const Amplitudes a = raw_amplitudes(cfg);
  CHECK(a.vacuum == Complex(1.0, 0.0));
  CHECK(std::abs(a.transmitted - first * cfg.transmit) < 1e-15);
  CHECK(std::abs(a.blocked - first * cfg.block) < 1e-15);
  CHECK(std::abs(a.converter2 - cfg.g2 * cfg.v2) < 1e-15);

  CHECK(build_state(cfg).norm() == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("state basis shares one idler label between the two pair terms") {
  const BasisPtr basis = state_basis();
  REQUIRE(basis->size() == 4);
  // Both occupied-idler labels carry the same "1_i" token; interference
  // lives in that identification.
  CHECK(basis->label(1)[0] == "1_i");
  CHECK(basis->label(3)[0] == "1_i");
  CHECK(basis->label(1)[1] == "1_s1");
  CHECK(basis->label(3)[2] == "1_s2");
}

TEST_CASE("operator and closed-form intensities agree") {
  const ZwmConfig base = sample_config();
  CHECK(std::abs(signal_intensity(base) - signal_intensity_operator(base)) <
        1e-15);

  Rng rng(301);
  for (int i = 0; i < 200; ++i) {
    ZwmConfig cfg;
    cfg.g1 = std::polar(0.1 * rng.uniform(), 2.0 * M_PI * rng.uniform());
    cfg.g2 = std::polar(0.1 * rng.uniform(), 2.0 * M_PI * rng.uniform());
    cfg.v1 = std::polar(rng.uniform(), 2.0 * M_PI * rng.uniform());
    cfg.v2 = std::polar(rng.uniform(), 2.0 * M_PI * rng.uniform());
    const double t = rng.uniform();
    cfg.transmit = std::polar(std::sqrt(t), 2.0 * M_PI * rng.uniform());
    cfg.block = std::polar(std::sqrt(1.0 - t), 2.0 * M_PI * rng.uniform());
    cfg.omega_i = 1e6 * rng.uniform();
    cfg.d12 = 100.0 * rng.uniform();
    cfg.t1 = 1e-6 * rng.uniform();
    cfg.t2 = 1e-6 * rng.uniform();
    cfg.theta1 = 2.0 * M_PI * rng.uniform();
    cfg.theta2 = 2.0 * M_PI * rng.uniform();
    CHECK(std::abs(signal_intensity(cfg) - signal_intensity_operator(cfg)) <
          1e-13);
  }
}

TEST_CASE("blocking the idler path flattens the fringe") {
  ZwmConfig cfg = sample_config();
  cfg.transmit = Complex(0.0, 0.0);
  cfg.block = Complex(1.0, 0.0);

  std::vector<double> offsets;
  for (int i = 0; i < 32; ++i) offsets.push_back(2.0 * M_PI * i / 32.0);
  const auto scan = scan_intensity(cfg, offsets);
  double lo = scan[0].second;
  double hi = scan[0].second;
  for (const auto& [offset, intensity] : scan) {
    lo = std::fmin(lo, intensity);
    hi = std::fmax(hi, intensity);
  }
  CHECK(hi - lo < 1e-15);
  CHECK(visibility(cfg) == 0.0);
}

TEST_CASE("visibility interpolates linearly in the transmission") {
  ZwmConfig cfg = sample_config();
  cfg.g1 = cfg.g2 = Complex(0.05, 0.0);
  cfg.v1 = cfg.v2 = Complex(1.0, 0.0);
  for (double t : {0.0, 0.3, 0.6, 1.0}) {
    cfg.transmit = std::polar(t, 0.7);
    cfg.block = std::polar(std::sqrt(1.0 - t * t), -0.2);
    CHECK(std::abs(visibility(cfg) - t) < 1e-14);
  }

  // Unequal couplings cap the fringe below one even at full transmission.
  cfg.g1 = Complex(0.02, 0.0);
  cfg.g2 = Complex(0.08, 0.0);
  cfg.transmit = Complex(1.0, 0.0);
  cfg.block = Complex(0.0, 0.0);
  const double p1 = std::norm(cfg.g1 * cfg.v1);
  const double p2 = std::norm(cfg.g2 * cfg.v2);
  CHECK(std::abs(visibility(cfg) -
                 2.0 * std::sqrt(p1 * p2) / (p1 + p2)) < 1e-14);

  ZwmConfig off = sample_config();
  off.g1 = off.g2 = Complex(0.0, 0.0);
  CHECK_THROWS_AS(visibility(off), InvalidArgument);
}

TEST_CASE("fringe scan extrema bracket the closed-form visibility") {
  const ZwmConfig cfg = sample_config();
  std::vector<double> offsets;
  const int n = 4096;
  for (int i = 0; i < n; ++i) offsets.push_back(2.0 * M_PI * i / n);
  const auto scan = scan_intensity(cfg, offsets);
  double lo = scan[0].second;
  double hi = scan[0].second;
  for (const auto& [offset, intensity] : scan) {
    lo = std::fmin(lo, intensity);
    hi = std::fmax(hi, intensity);
  }
  CHECK(std::abs((hi - lo) / (hi + lo) - visibility(cfg)) < 1e-6);
}

TEST_CASE("detector phase enters the fringe argument directly") {
  const ZwmConfig cfg = sample_config();
  ZwmConfig shifted = cfg;
  shifted.theta2 = cfg.theta2 + 0.25;
  CHECK(std::abs((fringe_phase(shifted) - fringe_phase(cfg)) - 0.25) < 1e-12);

  // Delaying the second conversion slides the fringe by omega * dt.
  for (const double dt : {1e-8, 1e-7}) {
    ZwmConfig later = cfg;
    later.t2 = cfg.t2 + dt;
    CHECK(std::abs((fringe_phase(cfg) - fringe_phase(later)) -
                   cfg.omega_i * dt) < 1e-9);
  }
}

TEST_CASE("attenuator response time is the light-travel bound") {
  CHECK(min_time_lag(0.3, 0.6) == 0.9 / 299792458.0);
  CHECK(min_time_lag(0.0, 0.0) == 0.0);
  CHECK_THROWS_AS(min_time_lag(-0.1, 0.5), InvalidArgument);
}
