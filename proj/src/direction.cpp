#include "direction.hpp"

#include <cmath>

#include "types.hpp"

namespace qsv {
namespace {

constexpr double kTwoPi = 2.0 * M_PI;

double wrap_phi(double phi) {
  double p = std::fmod(phi, kTwoPi);
  if (p < 0.0) p += kTwoPi;
  if (p >= kTwoPi) p = 0.0;
  return p;
}

}  // namespace

Direction::Direction(double theta, double phi) {
  if (!is_finite(theta) || !is_finite(phi)) {
    throw InvalidArgument("direction angles must be finite");
  }
  double t = std::fmod(theta, kTwoPi);
  if (t < 0.0) t += kTwoPi;
  if (t > M_PI) {
    // Fold through the antipodal representation of the same ray.
    t = kTwoPi - t;
    phi += M_PI;
  }
  theta_ = t;
  phi_ = wrap_phi(phi);
}

Direction Direction::from_cartesian(double x, double y, double z) {
  if (!is_finite(x) || !is_finite(y) || !is_finite(z)) {
    throw InvalidArgument("direction components must be finite");
  }
  const double r = std::sqrt(x * x + y * y + z * z);
  if (r < 1e-12) {
    throw InvalidArgument("direction vector too close to zero");
  }
  const double ct = std::fmin(1.0, std::fmax(-1.0, z / r));
  const double theta = std::acos(ct);
  double phi = std::atan2(y, x);
  return Direction(theta, phi);
}

Direction Direction::from_cartesian(const std::array<double, 3>& v) {
  return from_cartesian(v[0], v[1], v[2]);
}

Direction Direction::plus_x() { return Direction(M_PI / 2.0, 0.0); }
Direction Direction::plus_y() { return Direction(M_PI / 2.0, M_PI / 2.0); }
Direction Direction::plus_z() { return Direction(0.0, 0.0); }

std::array<double, 3> Direction::cartesian() const {
  const double st = std::sin(theta_);
  return {st * std::cos(phi_), st * std::sin(phi_), std::cos(theta_)};
}

double Direction::dot(const Direction& other) const {
  const auto a = cartesian();
  const auto b = other.cartesian();
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

Direction Direction::antipode() const {
  return Direction(M_PI - theta_, phi_ + M_PI);
}

}  // namespace qsv
