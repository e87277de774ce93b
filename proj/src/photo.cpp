#include "photo.hpp"

#include <cmath>

namespace qsv::photo {
namespace {

constexpr double kSymmetryTol = 1e-12;

double weight(const PhotoConfig& cfg) {
  return std::norm(cfg.a) + std::norm(cfg.b_plus) + std::norm(cfg.b_minus) +
         std::norm(cfg.c_plus) + std::norm(cfg.c_minus);
}

std::size_t electron_slot(int site) {
  if (site == 1) return kElectronPlus;
  if (site == -1) return kElectronMinus;
  throw InvalidArgument("site must be +1 or -1");
}

std::array<double, 2> split(double p_plus, double p_minus) {
  const double total = p_plus + p_minus;
  if (total == 0.0) return {0.0, 0.0};
  return {p_plus / total, p_minus / total};
}

}  // namespace

void validate(const PhotoConfig& cfg) {
  for (const Complex* z :
       {&cfg.a, &cfg.b_plus, &cfg.b_minus, &cfg.c_plus, &cfg.c_minus}) {
    if (!is_finite(*z)) {
      throw InvalidArgument("photo amplitudes must be finite");
    }
  }
  if (weight(cfg) == 0.0) {
    throw InvalidArgument("photo amplitudes must not all vanish");
  }
}

BasisPtr photo_basis() {
  return std::make_shared<Basis>(std::vector<BasisLabel>{
      {"photon@+x"},
      {"photon@-x"},
      {"electron@+x"},
      {"electron@-x"},
      {"other@+x"},
      {"other@-x"},
  });
}

Operator build_photo_s(const PhotoConfig& cfg) {
  validate(cfg);
  const double scale = 1.0 / std::sqrt(weight(cfg));
  const std::size_t n = 6;
  std::vector<Complex> m(n * n, Complex(0.0, 0.0));
  auto set = [&m, n, scale](std::size_t row, std::size_t col, Complex v) {
    m[row * n + col] = v * scale;
  };
  set(kPhotonPlus, kPhotonPlus, cfg.a);
  set(kElectronPlus, kPhotonPlus, cfg.b_plus);
  set(kOtherPlus, kPhotonPlus, cfg.c_plus);
  set(kPhotonMinus, kPhotonMinus, cfg.a);
  set(kElectronMinus, kPhotonMinus, cfg.b_minus);
  set(kOtherMinus, kPhotonMinus, cfg.c_minus);
  set(kPhotonPlus, kElectronPlus, -std::conj(cfg.b_plus));
  set(kElectronPlus, kElectronPlus, cfg.a);
  set(kPhotonMinus, kElectronMinus, -std::conj(cfg.b_minus));
  set(kElectronMinus, kElectronMinus, cfg.a);
  set(kPhotonPlus, kOtherPlus, -std::conj(cfg.c_plus));
  set(kOtherPlus, kOtherPlus, cfg.a);
  set(kPhotonMinus, kOtherMinus, -std::conj(cfg.c_minus));
  set(kOtherMinus, kOtherMinus, cfg.a);
  return Operator(photo_basis(), std::move(m));
}

Ket uniform_illumination(double phi) {
  if (!is_finite(phi)) throw InvalidArgument("phi must be finite");
  const double inv = 1.0 / std::sqrt(2.0);
  std::vector<Complex> amps(6, Complex(0.0, 0.0));
  amps[kPhotonPlus] = std::polar(inv, phi);
  amps[kPhotonMinus] = std::polar(inv, -phi);
  return Ket(photo_basis(), std::move(amps));
}

Ket evolve_uniform(const PhotoConfig& cfg, double phi) {
  return build_photo_s(cfg).apply(uniform_illumination(phi)).normalized();
}

Ket local_electron(int site) {
  return Ket::basis_state(photo_basis(), electron_slot(site));
}

Ket pre_image_of_local_electron(const PhotoConfig& cfg, int site) {
  const Ket raw = build_photo_s(cfg).apply_adjoint(local_electron(site));
  if (raw.norm() < 1e-12) {
    throw InvalidArgument(
        "electron at this site couples to nothing; no pre-image");
  }
  return raw.normalized();
}

UniformityReport uniformity_report(const PhotoConfig& cfg, double phi) {
  validate(cfg);
  if (std::abs(std::abs(cfg.b_plus) - std::abs(cfg.b_minus)) >= kSymmetryTol ||
      std::abs(std::abs(cfg.c_plus) - std::abs(cfg.c_minus)) >= kSymmetryTol) {
    throw InvalidArgument("uniformity report requires a site-symmetric metal");
  }
  const Ket evolved = evolve_uniform(cfg, phi);
  auto p = [&evolved](std::size_t slot) { return std::norm(evolved.amp(slot)); };

  UniformityReport report{};
  report.photon_split = split(p(kPhotonPlus), p(kPhotonMinus));
  report.electron_split = split(p(kElectronPlus), p(kElectronMinus));
  report.other_split = split(p(kOtherPlus), p(kOtherMinus));

  for (int site : {1, -1}) {
    const Complex& b = site == 1 ? cfg.b_plus : cfg.b_minus;
    double same = 0.0;  // stays zero when the electron couples to nothing
    if (std::norm(cfg.a) + std::norm(b) > 0.0) {
      const Ket pre = pre_image_of_local_electron(cfg, site);
      const std::size_t photon = site == 1 ? kPhotonPlus : kPhotonMinus;
      same = std::norm(pre.amp(photon)) +
             std::norm(pre.amp(electron_slot(site)));
    }
    (site == 1 ? report.pre_image_same_site_fraction_plus
               : report.pre_image_same_site_fraction_minus) = same;
  }
  return report;
}

}  // namespace qsv::photo
