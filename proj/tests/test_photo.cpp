#include "doctest.h"

#include <cmath>
#include <complex>
#include <vector>

#include "photo.hpp"

using namespace qsv;
using namespace qsv::photo;

namespace {

PhotoConfig generic_config() {
  return PhotoConfig{
      Complex(0.6, 0.15),   // a
      Complex(0.3, -0.2),   // b+
      Complex(-0.1, 0.25),  // b-
      Complex(0.2, 0.1),    // c+
      Complex(0.05, -0.3),  // c-
  };
}

double total_weight(const PhotoConfig& cfg) {
  return std::norm(cfg.a) + std::norm(cfg.b_plus) + std::norm(cfg.b_minus) +
         std::norm(cfg.c_plus) + std::norm(cfg.c_minus);
}

}  // namespace

TEST_CASE("config validation") {
  CHECK_NOTHROW(validate(generic_config()));

  PhotoConfig bad = generic_config();
  bad.c_minus = Complex(std::nan(""), 0.0);
  CHECK_THROWS_AS(validate(bad), InvalidArgument);

  const PhotoConfig zero{};
  CHECK_THROWS_AS(validate(zero), InvalidArgument);
}

TEST_CASE("scattering matrix carries the per-site amplitudes") {
  const PhotoConfig cfg = generic_config();
  const Operator s = build_photo_s(cfg);
  const double scale = 1.0 / std::sqrt(total_weight(cfg));

  CHECK(s.entry(kPhotonPlus, kPhotonPlus) == cfg.a * scale);
  CHECK(s.entry(kElectronPlus, kPhotonPlus) == cfg.b_plus * scale);
  CHECK(s.entry(kOtherPlus, kPhotonPlus) == cfg.c_plus * scale);
  CHECK(s.entry(kElectronMinus, kPhotonMinus) == cfg.b_minus * scale);
  // Reverse arrows pick up the conjugate with a sign.
  CHECK(s.entry(kPhotonPlus, kElectronPlus) == -std::conj(cfg.b_plus) * scale);
  CHECK(s.entry(kPhotonMinus, kOtherMinus) == -std::conj(cfg.c_minus) * scale);
  // Strictly local: nothing hops between sites.
  CHECK(s.entry(kElectronPlus, kPhotonMinus) == Complex(0.0, 0.0));
  CHECK(s.entry(kPhotonMinus, kElectronPlus) == Complex(0.0, 0.0));
}

TEST_CASE("evolved illumination keeps the per-site phase on each outcome") {
  const PhotoConfig cfg = generic_config();
  for (const double phi : {0.0, 0.7, 2.1}) {
    const Ket evolved = evolve_uniform(cfg, phi);
    const Complex east = std::polar(1.0, phi);
    const Complex west = std::polar(1.0, -phi);
    std::vector<Complex> expect = {cfg.a * east,       cfg.a * west,
                                   cfg.b_plus * east,  cfg.b_minus * west,
                                   cfg.c_plus * east,  cfg.c_minus * west};
    double norm2 = 0.0;
    for (const Complex& z : expect) norm2 += std::norm(z);
    const double inv = 1.0 / std::sqrt(norm2);
    for (std::size_t k = 0; k < 6; ++k) {
      CHECK(std::abs(evolved.amp(k) - expect[k] * inv) < 1e-14);
    }
    CHECK(evolved.norm() == doctest::Approx(1.0).epsilon(1e-14));
  }
}

TEST_CASE("pre-image of a freed electron is same-site, ratio b*:a*") {
  const PhotoConfig cfg = generic_config();
  for (const int site : {1, -1}) {
    const Ket pre = pre_image_of_local_electron(cfg, site);
    const std::size_t photon = site == 1 ? kPhotonPlus : kPhotonMinus;
    const std::size_t electron = site == 1 ? kElectronPlus : kElectronMinus;
    const Complex b = site == 1 ? cfg.b_plus : cfg.b_minus;

    double leak = 0.0;
    for (std::size_t k = 0; k < 6; ++k) {
      if (k != photon && k != electron) leak += std::norm(pre.amp(k));
    }
    CHECK(leak == 0.0);
    // photon : electron = conj(b) : conj(a), checked by cross-multiplying.
    CHECK(std::abs(pre.amp(photon) * std::conj(cfg.a) -
                   pre.amp(electron) * std::conj(b)) < 1e-15);
  }

  PhotoConfig deaf = generic_config();
  deaf.a = Complex(0.0, 0.0);
  deaf.b_plus = Complex(0.0, 0.0);
  CHECK_THROWS_AS(pre_image_of_local_electron(deaf, 1), InvalidArgument);
  CHECK_NOTHROW(pre_image_of_local_electron(deaf, -1));

  CHECK_THROWS_AS(local_electron(0), InvalidArgument);
}

TEST_CASE("pure absorber maps every photon into an electron") {
  PhotoConfig cfg{};
  cfg.b_plus = Complex(0.5, 0.3);
  cfg.b_minus = Complex(-0.4, 0.2);
  const double phi = 0.9;

  const Ket evolved = evolve_uniform(cfg, phi);
  CHECK(std::abs(evolved.amp(kPhotonPlus)) == 0.0);
  CHECK(std::abs(evolved.amp(kPhotonMinus)) == 0.0);
  CHECK(std::abs(evolved.amp(kOtherPlus)) == 0.0);
  CHECK(std::abs(evolved.amp(kOtherMinus)) == 0.0);
  const double w = std::sqrt(std::norm(cfg.b_plus) + std::norm(cfg.b_minus));
  CHECK(std::abs(evolved.amp(kElectronPlus) -
                 cfg.b_plus * std::polar(1.0 / w, phi)) < 1e-15);
  CHECK(std::abs(evolved.amp(kElectronMinus) -
                 cfg.b_minus * std::polar(1.0 / w, -phi)) < 1e-15);

  // With a = 0 the pre-image collapses onto the same-site photon.
  const Ket pre = pre_image_of_local_electron(cfg, 1);
  CHECK(std::abs(pre.amp(kPhotonPlus)) == doctest::Approx(1.0).epsilon(1e-15));
  for (std::size_t k = 1; k < 6; ++k) CHECK(pre.amp(k) == Complex(0.0, 0.0));
}

TEST_CASE("symmetric metal splits every category half and half") {
  PhotoConfig cfg;
  cfg.a = Complex(0.6, 0.15);
  cfg.b_plus = Complex(0.3, -0.2);
  cfg.b_minus = std::conj(cfg.b_plus);
  cfg.c_plus = Complex(0.2, 0.1);
  cfg.c_minus = std::conj(cfg.c_plus);

  const UniformityReport report = uniformity_report(cfg, 0.0);
  const std::array<double, 2> half = {0.5, 0.5};
  CHECK(report.photon_split == half);
  CHECK(report.electron_split == half);
  CHECK(report.other_split == half);
  CHECK(report.pre_image_same_site_fraction_plus ==
        doctest::Approx(1.0).epsilon(1e-14));
  CHECK(report.pre_image_same_site_fraction_minus ==
        doctest::Approx(1.0).epsilon(1e-14));

  // Equal moduli suffice; the phases may differ.
  PhotoConfig rotated = cfg;
  rotated.b_minus = cfg.b_plus * std::polar(1.0, 1.3);
  const UniformityReport r2 = uniformity_report(rotated, 0.4);
  CHECK(std::abs(r2.electron_split[0] - 0.5) < 1e-14);

  PhotoConfig lopsided = cfg;
  lopsided.b_minus = Complex(0.9, 0.0);
  CHECK_THROWS_AS(uniformity_report(lopsided, 0.0), InvalidArgument);
}

TEST_CASE("empty outcome categories report a zero split") {
  PhotoConfig cfg{};
  cfg.b_plus = Complex(0.5, 0.0);
  cfg.b_minus = Complex(0.0, 0.5);

  const UniformityReport report = uniformity_report(cfg, 0.2);
  const std::array<double, 2> none = {0.0, 0.0};
  CHECK(report.photon_split == none);
  CHECK(report.other_split == none);
  CHECK(report.electron_split == std::array<double, 2>{0.5, 0.5});
}
