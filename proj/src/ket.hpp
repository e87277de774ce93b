#pragma once

#include <span>
#include <vector>

#include "basis.hpp"
#include "types.hpp"

namespace qsv {

// State vector over a labeled basis.  Immutable; operations return new kets.
class Ket {
 public:
  Ket(BasisPtr basis, std::vector<Complex> amplitudes);

  // Unit vector along one basis label.
  static Ket basis_state(BasisPtr basis, std::size_t index);

  const Basis& basis() const { return *basis_; }
  const BasisPtr& basis_ptr() const { return basis_; }
  std::size_t dim() const { return amps_.size(); }
  const Complex& amp(std::size_t i) const { return amps_.at(i); }
  const std::vector<Complex>& amps() const { return amps_; }

  double norm() const;
  Ket normalized() const;  // rejects vectors with norm below 1e-12

  // Same amplitudes reinterpreted over another basis of equal dimension.
  Ket with_basis(BasisPtr basis) const;

 private:
  BasisPtr basis_;
  std::vector<Complex> amps_;
};

// <bra|ket>; the first argument is conjugated.  Bases must match.
Complex inner(const Ket& bra, const Ket& ket);

// |<a|b>|^2, the probability that the states are compatible.
double compat_prob(const Ket& a, const Ket& b);

// Kronecker product with concatenated labels, first factor most significant.
Ket tensor(const Ket& a, const Ket& b);
Ket tensor(std::span<const Ket> factors);

}  // namespace qsv
