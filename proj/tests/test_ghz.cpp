#include "doctest.h"

#include <array>
#include <cmath>
#include <complex>

#include "ghz.hpp"
#include "rng.hpp"

using namespace qsv;
using namespace qsv::ghz;

namespace {

// Closed form of <n1+, n2+, n3+ | state>, derived from the half-angle
// eigenspinors: [prod cos(t/2) - e^{-i sum phi} prod sin(t/2)] / sqrt(2).
Complex amplitude_oracle(const TripleDirections& t) {
  double pc = 1.0;
  double ps = 1.0;
  double phase = 0.0;
  for (const Direction* n : {&t.n1, &t.n2, &t.n3}) {
    pc *= std::cos(n->theta() / 2.0);
    ps *= std::sin(n->theta() / 2.0);
    phase += n->phi();
  }
  return (pc - std::polar(ps, -phase)) / std::sqrt(2.0);
}

// Root of cot(ti/2) cot(tj/2) cot(tk/2) = 1 in tk, by bisection; the product
// decreases monotonically in tk.
double bisect_theta_k(double ti, double tj) {
  const double target = cot_half(ti) * cot_half(tj);
  auto f = [&](double tk) { return target * cot_half(tk) - 1.0; };
  double lo = 1e-9;
  double hi = M_PI - 1e-9;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (f(mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("state is the balanced difference of the two pole triples") {
  const Ket g = ghz_state();
  const double inv = 1.0 / std::sqrt(2.0);
  CHECK(g.amp(0) == Complex(inv, 0.0));
  CHECK(g.amp(7) == Complex(-inv, 0.0));
  for (std::size_t i = 1; i < 7; ++i) CHECK(g.amp(i) == Complex(0.0, 0.0));
}

TEST_CASE("defining products have eigenvalues (+1, +1, +1, -1)") {
  const auto def = check_defining_eigenvalues();
  const std::array<double, 4> expect = {1.0, 1.0, 1.0, -1.0};
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(std::abs(def.values[i] - expect[i]) < 1e-14);
    CHECK(def.residuals[i] < 1e-14);
  }
}

TEST_CASE("single-site x leaves the state far from any eigenray") {
  for (int p = 0; p < 3; ++p) {
    CHECK(single_site_x_residual(p) > 0.5);
  }
  CHECK_THROWS_AS(single_site_x_residual(3), InvalidArgument);
}

TEST_CASE("amplitude matches the half-angle closed form") {
  Rng rng(201);
  for (int i = 0; i < 500; ++i) {
    const TripleDirections t{rng.unit_direction(), rng.unit_direction(),
                             rng.unit_direction()};
    const Complex amp = compat_amplitude(t, {1, 1, 1});
    CHECK(std::abs(amp - amplitude_oracle(t)) < 1e-13);
  }
}

TEST_CASE("negative signs flip through the antipode") {
  const TripleDirections t{Direction(0.7, 0.3), Direction(1.9, 4.1),
                           Direction(2.4, 2.2)};
  const TripleDirections flipped{t.n1.antipode(), t.n2, t.n3};
  CHECK(std::abs(compat_amplitude(t, {-1, 1, 1}) -
                 compat_amplitude(flipped, {1, 1, 1})) < 1e-14);
}

TEST_CASE("orthogonality needs both the product and the phase condition") {
  // Mirror latitudes with a right-angle third particle: product is one.
  const double a = 0.8;
  const TripleDirections good{Direction(a, 1.0), Direction(M_PI - a, 2.0),
                              Direction(M_PI / 2.0, 2.0 * M_PI - 3.0)};
  CHECK(orthogonality_condition(good));
  CHECK(std::abs(compat_amplitude(good, {1, 1, 1})) < 1e-10);

  // Same latitudes, phase sum off by a quarter turn.
  const TripleDirections bad_phase{Direction(a, 1.0), Direction(M_PI - a, 2.0),
                                   Direction(M_PI / 2.0, 2.5 * M_PI - 3.0)};
  CHECK(!orthogonality_condition(bad_phase));
  CHECK(std::abs(compat_amplitude(bad_phase, {1, 1, 1})) > 1e-3);

  // Zero phase sum but an unbalanced product.
  const TripleDirections bad_product{Direction(a, 1.0), Direction(a, 2.0),
                                     Direction(M_PI / 2.0, 2.0 * M_PI - 3.0)};
  CHECK(!orthogonality_condition(bad_product));
}

TEST_CASE("poles resolve by limit instead of dividing by zero") {
  // One direction at each pole: every amplitude term dies, orthogonal.
  const TripleDirections both{Direction(0.0, 0.0), Direction(M_PI, 0.0),
                              Direction(1.0, 0.0)};
  CHECK(orthogonality_condition(both));
  CHECK(std::abs(compat_amplitude(both, {1, 1, 1})) < 1e-15);

  // A single pole kills only one of the two products: never orthogonal.
  const TripleDirections single{Direction(0.0, 0.0), Direction(1.0, 0.0),
                                Direction(1.0, 0.0)};
  CHECK(!orthogonality_condition(single));
  CHECK(std::abs(compat_amplitude(single, {1, 1, 1})) > 0.1);
}

TEST_CASE("boundary solver inverts the product condition") {
  // cot(pi/6)^2 = 3, so the third half-angle needs cot = 1/3.
  CHECK(std::abs(solve_theta_k(M_PI / 3.0, M_PI / 3.0) -
                 2.4980915447965089) < 1e-14);

  Rng rng(202);
  for (int i = 0; i < 200; ++i) {
    const double ti = rng.uniform(0.3, M_PI - 0.3);
    const double tj = rng.uniform(0.3, M_PI - 0.3);
    const double tk = solve_theta_k(ti, tj);
    CHECK(std::abs(tk - bisect_theta_k(ti, tj)) < 1e-9);
    CHECK(std::abs(cot_half(ti) * cot_half(tj) * cot_half(tk) - 1.0) < 1e-12);
  }

  CHECK_THROWS_AS(solve_theta_k(0.0, 1.0), InvalidArgument);
  CHECK_THROWS_AS(solve_theta_k(1.0, M_PI), InvalidArgument);
}

TEST_CASE("hemisphere bands cover one half minus the margin") {
  const auto north = hemisphere_set(+1, 0.0);
  for (int p = 0; p < 3; ++p) {
    const auto bands = allowed_theta_bands(north, p);
    REQUIRE(bands.size() == 1);
    CHECK(bands[0].first == 0.0);
    CHECK(bands[0].second == doctest::Approx(M_PI / 2.0).epsilon(1e-15));
  }

  const auto south = hemisphere_set(-1, 1e-3);
  const auto bands = allowed_theta_bands(south, 0);
  REQUIRE(bands.size() == 1);
  CHECK(bands[0].first == doctest::Approx(M_PI / 2.0 + 1e-3).epsilon(1e-12));
  CHECK(bands[0].second == doctest::Approx(M_PI).epsilon(1e-15));
}

TEST_CASE("general sets alternate bands between the boundary latitudes") {
  const double ti = M_PI / 3.0;
  const auto set = build_consistent_set(ti, ti, {1, 1, -1}, 1e-6);
  CHECK(set.boundaries[0] == ti);
  CHECK(set.boundaries[2] ==
        doctest::Approx(2.4980915447965089).epsilon(1e-14));

  // Particle 1, pole +1: [0, ti - eps] then [pi/2 + eps, pi - ti - eps].
  const auto b1 = allowed_theta_bands(set, 0);
  REQUIRE(b1.size() == 2);
  CHECK(b1[0].first == 0.0);
  CHECK(b1[0].second == doctest::Approx(ti - 1e-6).epsilon(1e-12));
  CHECK(b1[1].first == doctest::Approx(M_PI / 2.0 + 1e-6).epsilon(1e-12));
  CHECK(b1[1].second == doctest::Approx(M_PI - ti - 1e-6).epsilon(1e-12));

  CHECK_THROWS_AS(build_consistent_set(ti, ti, {1, 1, 0}, 1e-6),
                  InvalidArgument);
  CHECK_THROWS_AS(build_consistent_set(ti, ti, {1, 1, -1}, 2.0),
                  InvalidArgument);
}

TEST_CASE("assignments follow the bands and stall inside the margin") {
  const auto set = hemisphere_set(+1, 0.1);
  CHECK(assign_spin(set, 0, Direction(0.2, 1.0)) == 1);
  CHECK(assign_spin(set, 0, Direction(M_PI - 0.2, 1.0)) == -1);
  CHECK(assign_spin(set, 0, Direction(M_PI / 2.0, 1.0)) == 0);
  CHECK(assign_spin(set, 0, Direction(M_PI / 2.0 + 0.05, 1.0)) == 0);

  const auto sharp = hemisphere_set(+1, 0.0);
  CHECK(assign_spin(sharp, 0, Direction(M_PI / 2.0, 1.0)) == 1);
}

TEST_CASE("verification finds no orthogonal triples in honest sets") {
  for (const auto& set :
       {hemisphere_set(+1, 1e-6),
        build_consistent_set(M_PI / 6.0, M_PI / 6.0, {1, 1, -1}, 1e-6),
        build_consistent_set(M_PI / 3.0, M_PI / 3.0, {1, 1, -1}, 1e-6)}) {
    const auto report = verify_consistent_set(set, 2000, 7);
    CHECK(report.samples == 2000);
    CHECK(report.violations == 0);
    CHECK(!report.probe_evaluated);
    CHECK(report.min_abs_amplitude > 1e-10);
  }
}

TEST_CASE("zero margin admits the boundary triple and gets caught") {
  const auto set =
      build_consistent_set(M_PI / 3.0, M_PI / 3.0, {1, 1, -1}, 0.0);
  const auto report = verify_consistent_set(set, 100, 7);
  CHECK(report.probe_evaluated);
  CHECK(report.probe_violation);
  CHECK(report.violations >= 1);
}

TEST_CASE("verification is reproducible for a fixed seed") {
  const auto set = hemisphere_set(+1, 1e-6);
  const auto a = verify_consistent_set(set, 500, 42);
  const auto b = verify_consistent_set(set, 500, 42);
  CHECK(a.min_abs_amplitude == b.min_abs_amplitude);
  CHECK(a.min_product_margin == b.min_product_margin);
}

TEST_CASE("all-x outcome table forces the paradox") {
  const auto report = mermin_paradox_report();
  for (std::size_t i = 0; i < 4; ++i) {
    const auto& p = report.minus_one_patterns[i];
    CHECK(p[0] * p[1] * p[2] == -1);
    CHECK(!report.contradicted_witnesses[i].empty());
  }
  CHECK(report.consistent_pattern == std::array<int, 3>{-1, -1, 1});
  CHECK(report.consistent_pattern_xxx_eigenvalue == 1);
  CHECK(std::abs(report.consistent_pattern_ghz_amplitude) < 1e-15);
}
