#pragma once

#include <string>

#include "dense_operator.hpp"
#include "direction.hpp"
#include "ket.hpp"

namespace qsv {

// Two-level basis {+<axis>, -<axis>}, e.g. {"+z", "-z"}.
BasisPtr spin_site_basis(const std::string& axis = "z");

// Spin projection along n:
//   [[cos t, sin t e^{-i p}], [sin t e^{+i p}, -cos t]]
// Hermitian, traceless, squares to the identity.
Operator sigma_dot_n(const Direction& n);

// +1 eigenvector of sigma_dot_n in half-angle form,
//   [cos(t/2), e^{+i p} sin(t/2)],
// which stays well defined at both poles.  First component is real and
// nonnegative by construction.
Ket eigenspinor_plus(const Direction& n);

// sign = +1 or -1; the -1 eigenvector is the +1 eigenvector of the antipode.
Ket eigenspinor(const Direction& n, int sign);

}  // namespace qsv
