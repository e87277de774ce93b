#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "dense_operator.hpp"
#include "direction.hpp"
#include "ket.hpp"
#include "tolerances.hpp"

namespace qsv::ghz {

struct TripleDirections {
  Direction n1;
  Direction n2;
  Direction n3;

  const Direction& at(int particle) const;
};

// Three-spin product basis over z tokens.
BasisPtr triple_basis();

// (|+z,+z,+z> - |-z,-z,-z>)/sqrt(2)
Ket ghz_state();

// Eigenvalues and residuals for the four defining products
// (x,y,y), (y,x,y), (y,y,x), (x,x,x).
struct DefiningEigenvalues {
  std::array<double, 4> values;     // Rayleigh quotients
  std::array<double, 4> residuals;  // |O psi - q psi|
};

DefiningEigenvalues check_defining_eigenvalues();

// Residual of the state against sigma.x on one site alone; large, since the
// state is only an eigenvector of the products.
double single_site_x_residual(int particle);

// <n1 s1, n2 s2, n3 s3 | state>, signs +1 or -1.
Complex compat_amplitude(const TripleDirections& t,
                         const std::array<int, 3>& signs);

// cos(theta/2)/sin(theta/2), evaluated by limit at the poles.
double cot_half(double theta);

// Product of the three cot(theta/2) values.
double cot_product(const TripleDirections& t);

// True when the positive-sign triple is orthogonal to the state: the phase
// sum vanishes mod 2 pi and the cot product is 1.  When both half-angle
// products underflow (one direction at each pole) the amplitude vanishes for
// every phase and the condition is true by limit; no input yields NaN.
bool orthogonality_condition(const TripleDirections& t,
                             double phase_tol = kPhaseTol,
                             double magnitude_tol = kPhaseTol);

// Boundary angle for the third particle such that the three cot products
// multiply to exactly one.
double solve_theta_k(double theta_i, double theta_j);

// Per-particle assignment of definite outcomes over the sphere.  Each
// particle has a boundary latitude pair {theta_b, pi - theta_b} plus the
// equator; the chosen pole picks which alternating bands carry +1.
struct ConsistentSet {
  std::array<int, 3> poles;          // +1 toward theta=0, -1 toward theta=pi
  std::array<double, 3> boundaries;  // theta_i, theta_j, theta_k
  double epsilon;                    // excluded half-width at each boundary
};

ConsistentSet build_consistent_set(double theta_i, double theta_j,
                                   const std::array<int, 3>& poles,
                                   double epsilon);

// Hemisphere assignment: boundary pi/2 for all particles.
ConsistentSet hemisphere_set(int pole, double epsilon);

// Latitude bands (theta_lo, theta_hi) where the particle's outcome is +1,
// with epsilon exclusions applied.
std::vector<std::pair<double, double>> allowed_theta_bands(
    const ConsistentSet& set, int particle);

// +1 when n falls in an allowed band, -1 when its antipode does, 0 within
// epsilon of a boundary latitude.
int assign_spin(const ConsistentSet& set, int particle, const Direction& n);

struct VerificationReport {
  std::uint64_t samples = 0;
  std::uint64_t violations = 0;
  double min_abs_amplitude = 0.0;
  double min_product_margin = 0.0;  // min |cot product - 1| over samples
  bool probe_evaluated = false;     // boundary triple fell inside the set
  bool probe_violation = false;
};

// Draws direction triples from the allowed bands (area uniform, seeded),
// folds outcomes to positive signs, and checks that no triple is orthogonal
// to the state.  Also probes the boundary triple itself, which enters the
// set only when epsilon is zero.
VerificationReport verify_consistent_set(const ConsistentSet& set,
                                         std::uint64_t samples,
                                         std::uint64_t seed,
                                         double check_tol = kCheckTol);

struct MerminReport {
  // All-x joint outcomes whose three-fold x product has eigenvalue -1,
  // in enumeration order.
  std::array<std::array<int, 3>, 4> minus_one_patterns;
  // For each such pattern, indices of defining witness vectors it contradicts
  // on a shared single-site value.
  std::array<std::vector<int>, 4> contradicted_witnesses;
  // The unique all-x pattern consistent with every witness site value.
  std::array<int, 3> consistent_pattern;
  int consistent_pattern_xxx_eigenvalue;
  Complex consistent_pattern_ghz_amplitude;
};

// Witness vectors (-x,+y,-y), (+y,-x,-y), (+y,+y,+x) against the all-x
// outcome table.
MerminReport mermin_paradox_report();

}  // namespace qsv::ghz
