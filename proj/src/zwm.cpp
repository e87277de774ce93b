#include "zwm.hpp"

#include <cmath>

namespace qsv::zwm {
namespace {

constexpr double kAttenuatorTol = 1e-12;
constexpr double kHardAmplitude = 0.3;
constexpr double kWarnAmplitude = 0.1;

enum Label : std::size_t {
  kVacuum = 0,
  kTransmitted = 1,
  kBlocked = 2,
  kConverter2 = 3,
  kBareIdler = 4,  // detector basis only
};

std::vector<BasisLabel> base_labels() {
  return {
      {"0_i", "0_s1", "0_s2"},
      {"1_i", "1_s1", "0_s2"},
      {"0_i", "1_s1", "0_s2"},
      {"1_i", "0_s1", "1_s2"},
  };
}

void check_finite(const Complex& z, const char* what) {
  if (!is_finite(z)) {
    throw InvalidArgument(std::string(what) + " must be finite");
  }
}

void check_finite(double x, const char* what) {
  if (!is_finite(x)) {
    throw InvalidArgument(std::string(what) + " must be finite");
  }
}

}  // namespace

std::vector<std::string> validate(const ZwmConfig& cfg) {
  check_finite(cfg.g1, "g1");
  check_finite(cfg.g2, "g2");
  check_finite(cfg.v1, "v1");
  check_finite(cfg.v2, "v2");
  check_finite(cfg.transmit, "transmit amplitude");
  check_finite(cfg.block, "block amplitude");
  check_finite(cfg.omega_i, "omega_i");
  check_finite(cfg.d12, "d12");
  check_finite(cfg.t1, "t1");
  check_finite(cfg.t2, "t2");
  check_finite(cfg.theta1, "theta1");
  check_finite(cfg.theta2, "theta2");
  if (cfg.omega_i < 0.0) throw InvalidArgument("omega_i must be nonnegative");
  if (cfg.d12 < 0.0) throw InvalidArgument("d12 must be nonnegative");
  const double unit = std::norm(cfg.transmit) + std::norm(cfg.block);
  if (std::abs(unit - 1.0) >= kAttenuatorTol) {
    throw InvalidArgument(
        "attenuator amplitudes must satisfy |T|^2 + |B|^2 = 1");
  }

  std::vector<std::string> warnings;
  const double a1 = std::abs(cfg.g1 * cfg.v1);
  const double a2 = std::abs(cfg.g2 * cfg.v2);
  for (const auto& [name, a] :
       {std::pair<const char*, double>{"|g1 V1|", a1}, {"|g2 V2|", a2}}) {
    if (a > kHardAmplitude) {
      throw InvalidArgument(std::string(name) +
                            " exceeds 0.3; the first-order state is invalid");
    }
    if (a > kWarnAmplitude) {
      warnings.push_back(std::string(name) + " = " + std::to_string(a) +
                         " exceeds 0.1; first-order truncation degrades");
    }
  }
  return warnings;
}

BasisPtr state_basis() {
  return std::make_shared<Basis>(base_labels());
}

BasisPtr detector_basis() {
  auto labels = base_labels();
  labels.push_back({"1_i", "0_s1", "0_s2"});
  return std::make_shared<Basis>(std::move(labels));
}

Complex idler_phase(const ZwmConfig& cfg) {
  return std::polar(1.0,
                    cfg.omega_i * ((cfg.t2 - cfg.t1) - cfg.d12 / kSpeedOfLight));
}

Amplitudes raw_amplitudes(const ZwmConfig& cfg) {
  validate(cfg);
  const Complex first = cfg.g1 * cfg.v1 * idler_phase(cfg);
  return Amplitudes{Complex(1.0, 0.0), first * cfg.transmit,
                    first * cfg.block, cfg.g2 * cfg.v2};
}

Ket build_state(const ZwmConfig& cfg) {
  const Amplitudes a = raw_amplitudes(cfg);
  return Ket(state_basis(),
             {a.vacuum, a.transmitted, a.blocked, a.converter2})
      .normalized();
}

Operator signal_annihilator(const ZwmConfig& cfg) {
  validate(cfg);
  BasisPtr basis = detector_basis();
  const std::size_t n = basis->size();
  std::vector<Complex> m(n * n, Complex(0.0, 0.0));
  const Complex e1 = std::polar(1.0, cfg.theta1);
  const Complex e2 = std::polar(1.0, cfg.theta2);
  // a_s1: transmitted pair -> bare idler, blocked signal -> vacuum.
  m[kBareIdler * n + kTransmitted] += e1;
  m[kVacuum * n + kBlocked] += e1;
  // a_s2: second-converter pair -> bare idler.
  m[kBareIdler * n + kConverter2] += e2;
  return Operator(std::move(basis), std::move(m));
}

double fringe_phase(const ZwmConfig& cfg) {
  return cfg.theta2 - cfg.theta1 -
         cfg.omega_i * ((cfg.t2 - cfg.t1) - cfg.d12 / kSpeedOfLight) +
         std::arg(cfg.g2) - std::arg(cfg.g1) + std::arg(cfg.v2) -
         std::arg(cfg.v1) - std::arg(cfg.transmit);
}

double signal_intensity(const ZwmConfig& cfg) {
  validate(cfg);
  const double p1 = std::norm(cfg.g1 * cfg.v1);
  const double p2 = std::norm(cfg.g2 * cfg.v2);
  const double cross = 2.0 * std::abs(cfg.g1 * cfg.v1) *
                       std::abs(cfg.g2 * cfg.v2) * std::abs(cfg.transmit);
  return p1 + p2 + cross * std::cos(fringe_phase(cfg));
}

double signal_intensity_operator(const ZwmConfig& cfg) {
  const Amplitudes a = raw_amplitudes(cfg);
  const Ket psi(detector_basis(), {a.vacuum, a.transmitted, a.blocked,
                                   a.converter2, Complex(0.0, 0.0)});
  const Ket detected = signal_annihilator(cfg).apply(psi);
  const double n = detected.norm();
  return n * n;
}

double visibility(const ZwmConfig& cfg) {
  validate(cfg);
  const double p1 = std::norm(cfg.g1 * cfg.v1);
  const double p2 = std::norm(cfg.g2 * cfg.v2);
  if (p1 + p2 == 0.0) {
    throw InvalidArgument("visibility undefined with both couplings off");
  }
  return 2.0 * std::abs(cfg.g1 * cfg.v1) * std::abs(cfg.g2 * cfg.v2) *
         std::abs(cfg.transmit) / (p1 + p2);
}

std::vector<std::pair<double, double>> scan_intensity(
    const ZwmConfig& cfg, const std::vector<double>& phase_offsets) {
  if (phase_offsets.empty()) {
    throw InvalidArgument("scan requires at least one offset");
  }
  std::vector<std::pair<double, double>> out;
  out.reserve(phase_offsets.size());
  ZwmConfig shifted = cfg;
  for (double offset : phase_offsets) {
    check_finite(offset, "phase offset");
    shifted.theta2 = cfg.theta2 + offset;
    out.push_back({offset, signal_intensity(shifted)});
  }
  return out;
}

double min_time_lag(double d_attenuator_to_dc2, double d_dc2_to_detector) {
  check_finite(d_attenuator_to_dc2, "distance");
  check_finite(d_dc2_to_detector, "distance");
  if (d_attenuator_to_dc2 < 0.0 || d_dc2_to_detector < 0.0) {
    throw InvalidArgument("distances must be nonnegative");
  }
  const long double sum = static_cast<long double>(d_attenuator_to_dc2) +
                          static_cast<long double>(d_dc2_to_detector);
  return static_cast<double>(sum / static_cast<long double>(kSpeedOfLight));
}

}  // namespace qsv::zwm
