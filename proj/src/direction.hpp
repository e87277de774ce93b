#pragma once

#include <array>

namespace qsv {

// Unit direction on the sphere in polar form: theta in [0, pi] measured from
// +z, phi in [0, 2*pi) measured from +x toward +y.  Constructors canonicalize
// out-of-range angles instead of rejecting them.
class Direction {
 public:
  Direction(double theta, double phi);

  // Normalizes (x, y, z); rejects vectors with norm below 1e-12.
  static Direction from_cartesian(double x, double y, double z);
  static Direction from_cartesian(const std::array<double, 3>& v);

  static Direction plus_x();
  static Direction plus_y();
  static Direction plus_z();

  double theta() const { return theta_; }
  double phi() const { return phi_; }

  std::array<double, 3> cartesian() const;
  double dot(const Direction& other) const;

  // The opposite direction: theta -> pi - theta, phi -> phi + pi.
  Direction antipode() const;

 private:
  double theta_;
  double phi_;
};

}  // namespace qsv
