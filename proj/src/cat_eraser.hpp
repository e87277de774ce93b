#pragma once

#include <cmath>

#include "dense_operator.hpp"
#include "ket.hpp"

namespace qsv::cat_eraser {

// Atom-spin x nucleus system.  Fixed serialization order.
enum class CatLabel : int {
  plus_intact = 0,
  minus_intact = 1,
  plus_decayed = 2,
  minus_decayed = 3,
};

struct CatPhases {
  double phi = M_PI;
  double chi = 0.0;
};

// [(+x,intact), (-x,intact), (+x,decayed), (-x,decayed)]
BasisPtr cat_basis();

// Unitary coupling of the atom spin to the nucleus:
//   (1 + e^{+i phi} a b+ + e^{+i chi} a+ b+ - e^{-i phi} a+ b - e^{-i chi} a b)
//   / sqrt(2)
// where a lowers +x -> -x on the spin and b+ raises intact -> decayed.
Operator build_cat_s(const CatPhases& phases);

// S applied to one initial configuration.
Ket evolve(CatLabel initial, const CatPhases& phases);

// S^dagger applied to one final configuration: the superposition of initial
// configurations that feeds a given post-evolution reading.
Ket initial_form_of_final(CatLabel final_label, const CatPhases& phases);

// With phi = pi, evolving (+x, intact) and renaming the nucleus readings
// decayed -> "+x", intact -> "-x" lands exactly on the two-spin singlet.
// Returned over the x-token pair basis in product order.  Rejects phi != pi.
Ket map_to_singlet(const CatPhases& phases);

// Atom-field state (|+x,+x> + |-x,-x>)/sqrt(2) used by the eraser analysis.
Ket sew_state();

enum class SewBasis { x, z };

// Joint detection probability for measuring site 1 in b1 and site 2 in b2
// with outcomes s1, s2 (each +1 or -1); z readings are the even/odd
// combinations (|+x> +/- |-x>)/sqrt(2).
double sew_joint_prob(SewBasis b1, SewBasis b2, int s1, int s2);

}  // namespace qsv::cat_eraser
