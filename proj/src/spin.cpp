#include "spin.hpp"

#include <cmath>

namespace qsv {

BasisPtr spin_site_basis(const std::string& axis) {
  return Basis::single_site({"+" + axis, "-" + axis});
}

Operator sigma_dot_n(const Direction& n) {
  const double t = n.theta();
  const double p = n.phi();
  const double ct = std::cos(t);
  const double st = std::sin(t);
  const Complex down(st * std::cos(p), -st * std::sin(p));
  std::vector<Complex> m = {Complex(ct, 0.0), down,  //
                            std::conj(down), Complex(-ct, 0.0)};
  return Operator(spin_site_basis(), std::move(m));
}

Ket eigenspinor_plus(const Direction& n) {
  const double h = 0.5 * n.theta();
  const Complex up(std::cos(h), 0.0);
  const Complex down = std::polar(std::sin(h), n.phi());
  return Ket(spin_site_basis(), {up, down});
}

Ket eigenspinor(const Direction& n, int sign) {
  if (sign == 1) return eigenspinor_plus(n);
  if (sign == -1) return eigenspinor_plus(n.antipode());
  throw InvalidArgument("eigenspinor sign must be +1 or -1");
}

}  // namespace qsv
