#include "cat_eraser.hpp"

#include "bell.hpp"

namespace qsv::cat_eraser {
namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

void check_phase(double p) {
  if (!is_finite(p)) throw InvalidArgument("phases must be finite");
}

std::size_t label_index(CatLabel l) {
  const int i = static_cast<int>(l);
  if (i < 0 || i > 3) throw InvalidArgument("unknown cat label");
  return static_cast<std::size_t>(i);
}

}  // namespace

BasisPtr cat_basis() {
  return std::make_shared<Basis>(std::vector<BasisLabel>{
      {"+x", "intact"},
      {"-x", "intact"},
      {"+x", "decayed"},
      {"-x", "decayed"},
  });
}

Operator build_cat_s(const CatPhases& phases) {
  check_phase(phases.phi);
  check_phase(phases.chi);
  const Complex eip = std::polar(1.0, phases.phi);
  const Complex eic = std::polar(1.0, phases.chi);

  // Columns follow the basis order above.  Each initial configuration keeps
  // itself and gains the spin-flipped partner with the flipped nucleus.
  std::vector<Complex> m(16, Complex(0.0, 0.0));
  auto set = [&m](std::size_t row, std::size_t col, const Complex& v) {
    m[row * 4 + col] = v;
  };
  // (+x, intact) -> (+x, intact) + e^{+i phi} (-x, decayed)
  set(0, 0, 1.0);
  set(3, 0, eip);
  // (-x, intact) -> (-x, intact) + e^{+i chi} (+x, decayed)
  set(1, 1, 1.0);
  set(2, 1, eic);
  // (+x, decayed) -> (+x, decayed) - e^{-i chi} (-x, intact)
  set(2, 2, 1.0);
  set(1, 2, -std::conj(eic));
  // (-x, decayed) -> (-x, decayed) - e^{-i phi} (+x, intact)
  set(3, 3, 1.0);
  set(0, 3, -std::conj(eip));
  for (auto& v : m) v *= kInvSqrt2;

  return Operator(cat_basis(), std::move(m), /*require_unitary=*/true);
}

Ket evolve(CatLabel initial, const CatPhases& phases) {
  const Operator s = build_cat_s(phases);
  return s.apply(Ket::basis_state(s.basis_ptr(), label_index(initial)));
}

Ket initial_form_of_final(CatLabel final_label, const CatPhases& phases) {
  const Operator s = build_cat_s(phases);
  return s.apply_adjoint(
      Ket::basis_state(s.basis_ptr(), label_index(final_label)));
}

Ket map_to_singlet(const CatPhases& phases) {
  if (std::abs(phases.phi - M_PI) >= 1e-12) {
    throw InvalidArgument("the singlet mapping requires phi = pi");
  }
  const Ket evolved = evolve(CatLabel::plus_intact, phases);

  // Rename the nucleus reading as a second spin: decayed -> +x, intact -> -x,
  // then reorder into the product-basis enumeration.
  const BasisPtr target = bell::pair_basis("x");
  std::vector<Complex> amps(4, Complex(0.0, 0.0));
  const std::array<std::size_t, 4> to_target = {
      1,  // (+x, intact)  -> (+x, -x)
      3,  // (-x, intact)  -> (-x, -x)
      0,  // (+x, decayed) -> (+x, +x)
      2,  // (-x, decayed) -> (-x, +x)
  };
  for (std::size_t i = 0; i < 4; ++i) amps[to_target[i]] = evolved.amp(i);
  const Ket mapped(target, std::move(amps));

  const Ket expected = bell::singlet("x");
  for (std::size_t i = 0; i < 4; ++i) {
    if (std::abs(mapped.amp(i) - expected.amp(i)) >= 1e-12) {
      throw CheckFailure("mapped state does not match the singlet form");
    }
  }
  return mapped;
}

Ket sew_state() {
  return Ket(bell::pair_basis("x"),
             {Complex(kInvSqrt2, 0.0), Complex(0.0, 0.0), Complex(0.0, 0.0),
              Complex(kInvSqrt2, 0.0)});
}

double sew_joint_prob(SewBasis b1, SewBasis b2, int s1, int s2) {
  if ((s1 != 1 && s1 != -1) || (s2 != 1 && s2 != -1)) {
    throw InvalidArgument("outcome signs must be +1 or -1");
  }
  const BasisPtr site = spin_site_basis("x");
  auto site_vector = [&site](SewBasis b, int sign) {
    if (b == SewBasis::x) {
      return Ket(site, {Complex(sign == 1 ? 1.0 : 0.0, 0.0),
                        Complex(sign == 1 ? 0.0 : 1.0, 0.0)});
    }
    return Ket(site, {Complex(kInvSqrt2, 0.0),
                      Complex(sign == 1 ? kInvSqrt2 : -kInvSqrt2, 0.0)});
  };
  return compat_prob(tensor(site_vector(b1, s1), site_vector(b2, s2)),
                     sew_state());
}

}  // namespace qsv::cat_eraser
