#include "ghz.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rng.hpp"
#include "spin.hpp"

namespace qsv::ghz {
namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
constexpr double kHalfPi = M_PI / 2.0;

// Below this, both half-angle products are treated as vanished: one spin sits
// at each pole and the amplitude is zero for every phase.
constexpr double kDegenerateProduct = 1e-12;

// Bands thinner than this are structurally empty.  Boundary angles computed
// through solve_theta_k can miss a degenerate latitude (pi/2 at equal
// complementary inputs) by a few ulp, which would otherwise leave behind a
// sliver band.
constexpr double kMinBandWidth = 1e-9;

double wrap_to_pm_pi(double angle) {
  double a = std::fmod(angle, 2.0 * M_PI);
  if (a > M_PI) a -= 2.0 * M_PI;
  if (a <= -M_PI) a += 2.0 * M_PI;
  return a;
}

Operator site_x() { return sigma_dot_n(Direction::plus_x()); }
Operator site_y() { return sigma_dot_n(Direction::plus_y()); }

Operator site_identity() { return Operator::identity(spin_site_basis()); }

double residual_against(const Operator& op, const Ket& psi, double q) {
  const Ket applied = op.apply(psi);
  double s = 0.0;
  for (std::size_t i = 0; i < psi.dim(); ++i) {
    s += std::norm(applied.amp(i) - q * psi.amp(i));
  }
  return std::sqrt(s);
}

int check_pole(int pole) {
  if (pole != 1 && pole != -1) {
    throw InvalidArgument("poles must be +1 (toward 0) or -1 (toward pi)");
  }
  return pole;
}

int check_particle(int particle) {
  if (particle < 0 || particle > 2) {
    throw InvalidArgument("particle index must be 0, 1 or 2");
  }
  return particle;
}

}  // namespace

const Direction& TripleDirections::at(int particle) const {
  switch (check_particle(particle)) {
    case 0: return n1;
    case 1: return n2;
    default: return n3;
  }
}

BasisPtr triple_basis() {
  const BasisPtr site = spin_site_basis();
  return Basis::product(*Basis::product(*site, *site), *site);
}

Ket ghz_state() {
  std::vector<Complex> amps(8, Complex(0.0, 0.0));
  amps[0] = Complex(kInvSqrt2, 0.0);
  amps[7] = Complex(-kInvSqrt2, 0.0);
  return Ket(triple_basis(), std::move(amps));
}

DefiningEigenvalues check_defining_eigenvalues() {
  const Ket psi = ghz_state();
  const std::array<Operator, 4> ops = {
      kron(site_x(), site_y(), site_y()),
      kron(site_y(), site_x(), site_y()),
      kron(site_y(), site_y(), site_x()),
      kron(site_x(), site_x(), site_x()),
  };
  DefiningEigenvalues out{};
  for (std::size_t i = 0; i < ops.size(); ++i) {
    const Complex q = expectation(ops[i], psi);
    out.values[i] = q.real();
    out.residuals[i] = residual_against(ops[i], psi, q.real());
  }
  return out;
}

double single_site_x_residual(int particle) {
  check_particle(particle);
  const Operator op = kron(particle == 0 ? site_x() : site_identity(),
                           particle == 1 ? site_x() : site_identity(),
                           particle == 2 ? site_x() : site_identity());
  const Ket psi = ghz_state();
  const Complex q = expectation(op, psi);
  return residual_against(op, psi, q.real());
}

Complex compat_amplitude(const TripleDirections& t,
                         const std::array<int, 3>& signs) {
  const std::array<Ket, 3> factors = {eigenspinor(t.n1, signs[0]),
                                      eigenspinor(t.n2, signs[1]),
                                      eigenspinor(t.n3, signs[2])};
  return inner(tensor(std::span<const Ket>(factors)), ghz_state());
}

double cot_half(double theta) {
  const double h = 0.5 * theta;
  const double s = std::sin(h);
  const double c = std::cos(h);
  if (s == 0.0) return std::numeric_limits<double>::infinity();
  return c / s;
}

double cot_product(const TripleDirections& t) {
  return cot_half(t.n1.theta()) * cot_half(t.n2.theta()) *
         cot_half(t.n3.theta());
}

bool orthogonality_condition(const TripleDirections& t, double phase_tol,
                             double magnitude_tol) {
  const std::array<double, 3> half = {0.5 * t.n1.theta(), 0.5 * t.n2.theta(),
                                      0.5 * t.n3.theta()};
  double pc = 1.0;
  double ps = 1.0;
  for (double h : half) {
    pc *= std::cos(h);
    ps *= std::sin(h);
  }
  if (pc < kDegenerateProduct && ps < kDegenerateProduct) return true;
  if (ps == 0.0 || pc == 0.0) return false;
  const bool magnitude_ok = std::abs(pc / ps - 1.0) < magnitude_tol;
  const double phase_sum = t.n1.phi() + t.n2.phi() + t.n3.phi();
  const bool phase_ok = std::abs(wrap_to_pm_pi(phase_sum)) < phase_tol;
  return magnitude_ok && phase_ok;
}

double solve_theta_k(double theta_i, double theta_j) {
  if (!(theta_i > 0.0 && theta_i < M_PI && theta_j > 0.0 && theta_j < M_PI)) {
    throw InvalidArgument("boundary angles must lie strictly between 0 and pi");
  }
  return 2.0 * std::atan(cot_half(theta_i) * cot_half(theta_j));
}

ConsistentSet build_consistent_set(double theta_i, double theta_j,
                                   const std::array<int, 3>& poles,
                                   double epsilon) {
  for (int p : poles) check_pole(p);
  if (!is_finite(epsilon) || epsilon < 0.0 || epsilon >= kHalfPi) {
    throw InvalidArgument("epsilon must lie in [0, pi/2)");
  }
  ConsistentSet set{poles, {theta_i, theta_j, solve_theta_k(theta_i, theta_j)},
                    epsilon};
  for (int p = 0; p < 3; ++p) {
    // Reject configurations where the exclusion swallows a region that has
    // positive width at epsilon = 0.
    ConsistentSet bare = set;
    bare.epsilon = 0.0;
    const auto full = allowed_theta_bands(bare, p);
    const auto shrunk = allowed_theta_bands(set, p);
    if (shrunk.size() != full.size()) {
      throw InvalidArgument("epsilon leaves an empty allowed region");
    }
  }
  return set;
}

ConsistentSet hemisphere_set(int pole, double epsilon) {
  check_pole(pole);
  if (!is_finite(epsilon) || epsilon < 0.0 || epsilon >= kHalfPi) {
    throw InvalidArgument("epsilon must lie in [0, pi/2)");
  }
  return ConsistentSet{{pole, pole, pole}, {kHalfPi, kHalfPi, kHalfPi},
                       epsilon};
}

std::vector<std::pair<double, double>> allowed_theta_bands(
    const ConsistentSet& set, int particle) {
  check_particle(particle);
  const double tb = set.boundaries[static_cast<std::size_t>(particle)];
  const double lo_b = std::fmin(tb, M_PI - tb);
  const double hi_b = std::fmax(tb, M_PI - tb);
  const double eps = set.epsilon;

  std::vector<std::pair<double, double>> bands;
  if (set.poles[static_cast<std::size_t>(particle)] == 1) {
    bands.push_back({0.0, lo_b - eps});
    bands.push_back({kHalfPi + eps, hi_b - eps});
  } else {
    bands.push_back({lo_b + eps, kHalfPi - eps});
    bands.push_back({hi_b + eps, M_PI});
  }
  std::vector<std::pair<double, double>> out;
  for (const auto& b : bands) {
    if (b.second - b.first > kMinBandWidth) out.push_back(b);
  }
  return out;
}

int assign_spin(const ConsistentSet& set, int particle, const Direction& n) {
  check_particle(particle);
  const double theta = n.theta();
  const double tb = set.boundaries[static_cast<std::size_t>(particle)];
  const double boundaries[3] = {std::fmin(tb, M_PI - tb),
                                std::fmax(tb, M_PI - tb), kHalfPi};
  if (set.epsilon > 0.0) {
    for (double b : boundaries) {
      if (std::abs(theta - b) < set.epsilon) return 0;
    }
  }
  for (const auto& band : allowed_theta_bands(set, particle)) {
    if (theta >= band.first && theta <= band.second) return 1;
  }
  return -1;
}

VerificationReport verify_consistent_set(const ConsistentSet& set,
                                         std::uint64_t samples,
                                         std::uint64_t seed,
                                         double check_tol) {
  VerificationReport report{};
  report.min_abs_amplitude = std::numeric_limits<double>::infinity();
  report.min_product_margin = std::numeric_limits<double>::infinity();

  struct ParticleBands {
    std::vector<std::pair<double, double>> bands;
    std::vector<double> weights;  // solid-angle weight per band
    double total = 0.0;
  };
  std::array<ParticleBands, 3> pb;
  for (int p = 0; p < 3; ++p) {
    pb[p].bands = allowed_theta_bands(set, p);
    if (pb[p].bands.empty()) {
      throw InvalidArgument("set has no allowed region to sample");
    }
    for (const auto& b : pb[p].bands) {
      const double w = std::cos(b.first) - std::cos(b.second);
      pb[p].weights.push_back(w);
      pb[p].total += w;
    }
  }

  Rng rng(seed);
  auto draw = [&rng](const ParticleBands& bands) {
    double pick = rng.uniform() * bands.total;
    std::size_t idx = 0;
    while (idx + 1 < bands.bands.size() && pick > bands.weights[idx]) {
      pick -= bands.weights[idx];
      ++idx;
    }
    const auto& b = bands.bands[idx];
    const double c_lo = std::cos(b.first);
    const double c_hi = std::cos(b.second);
    const double c = c_lo + (c_hi - c_lo) * rng.uniform();
    const double theta = std::acos(std::fmin(1.0, std::fmax(-1.0, c)));
    const double phi = 2.0 * M_PI * rng.uniform();
    return Direction(theta, phi);
  };

  auto evaluate = [&](const TripleDirections& t) {
    const bool cond = orthogonality_condition(t);
    const double amp = std::abs(compat_amplitude(t, {1, 1, 1}));
    const double prod = cot_product(t);
    if (std::isfinite(prod)) {
      report.min_product_margin =
          std::fmin(report.min_product_margin, std::abs(prod - 1.0));
    }
    report.min_abs_amplitude = std::fmin(report.min_abs_amplitude, amp);
    return cond || amp <= check_tol;
  };

  for (std::uint64_t s = 0; s < samples; ++s) {
    // Fold each outcome to its positive-sign direction before testing.  A
    // draw can graze an epsilon edge through acos rounding; such directions
    // are outside the set and are skipped, not counted.
    std::array<Direction, 3> folded = {draw(pb[0]), draw(pb[1]), draw(pb[2])};
    bool defined = true;
    for (int p = 0; p < 3; ++p) {
      const int a = assign_spin(set, p, folded[p]);
      if (a == 0) {
        defined = false;
        break;
      }
      if (a < 0) folded[p] = folded[p].antipode();
    }
    if (!defined) continue;
    if (evaluate(TripleDirections{folded[0], folded[1], folded[2]})) {
      ++report.violations;
    }
    ++report.samples;
  }

  // Boundary probe: the triple of boundary latitudes sits exactly on the
  // product-one surface, so including it (epsilon = 0) must be flagged.
  const TripleDirections probe{Direction(set.boundaries[0], 0.0),
                               Direction(set.boundaries[1], 0.0),
                               Direction(set.boundaries[2], 0.0)};
  bool probe_in_set = true;
  for (int p = 0; p < 3; ++p) {
    if (assign_spin(set, p, probe.at(p)) != 1) probe_in_set = false;
  }
  if (probe_in_set) {
    report.probe_evaluated = true;
    report.probe_violation = evaluate(probe);
    if (report.probe_violation) ++report.violations;
  }

  if (!std::isfinite(report.min_abs_amplitude)) report.min_abs_amplitude = 0.0;
  if (!std::isfinite(report.min_product_margin)) {
    report.min_product_margin = 0.0;
  }
  return report;
}

MerminReport mermin_paradox_report() {
  struct Witness {
    std::array<char, 3> axis;
    std::array<int, 3> sign;
  };
  const std::array<Witness, 3> witnesses = {
      Witness{{'x', 'y', 'y'}, {-1, 1, -1}},
      Witness{{'y', 'x', 'y'}, {1, -1, -1}},
      Witness{{'y', 'y', 'x'}, {1, 1, 1}},
  };

  MerminReport report{};
  std::size_t found = 0;
  bool consistent_found = false;
  for (int s1 : {1, -1}) {
    for (int s2 : {1, -1}) {
      for (int s3 : {1, -1}) {
        const std::array<int, 3> pattern = {s1, s2, s3};
        std::vector<int> contradicted;
        for (std::size_t w = 0; w < witnesses.size(); ++w) {
          for (int site = 0; site < 3; ++site) {
            if (witnesses[w].axis[static_cast<std::size_t>(site)] == 'x' &&
                witnesses[w].sign[static_cast<std::size_t>(site)] !=
                    pattern[static_cast<std::size_t>(site)]) {
              contradicted.push_back(static_cast<int>(w));
              break;
            }
          }
        }
        if (s1 * s2 * s3 == -1) {
          if (found >= 4) throw CheckFailure("more than four odd patterns");
          report.minus_one_patterns[found] = pattern;
          report.contradicted_witnesses[found] = contradicted;
          ++found;
        }
        if (contradicted.empty()) {
          if (consistent_found) {
            throw CheckFailure("consistent all-x pattern is not unique");
          }
          consistent_found = true;
          report.consistent_pattern = pattern;
          report.consistent_pattern_xxx_eigenvalue = s1 * s2 * s3;
        }
      }
    }
  }
  if (found != 4 || !consistent_found) {
    throw CheckFailure("all-x outcome enumeration is inconsistent");
  }

  const Direction plus_x = Direction::plus_x();
  report.consistent_pattern_ghz_amplitude = compat_amplitude(
      TripleDirections{plus_x, plus_x, plus_x}, report.consistent_pattern);
  return report;
}

}  // namespace qsv::ghz
