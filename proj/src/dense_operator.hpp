#pragma once

#include <vector>

#include "basis.hpp"
#include "ket.hpp"
#include "tolerances.hpp"
#include "types.hpp"

namespace qsv {

// Dense square operator over a labeled basis, row major.  Dimensions stay at
// or below 8 in this library, so no sparse or lazy machinery is warranted.
class Operator {
 public:
  Operator(BasisPtr basis, std::vector<Complex> row_major,
           bool require_unitary = false, double check_tol = kCheckTol);

  static Operator identity(BasisPtr basis);
  static Operator zero(BasisPtr basis);

  const Basis& basis() const { return *basis_; }
  const BasisPtr& basis_ptr() const { return basis_; }
  std::size_t dim() const { return dim_; }

  const Complex& entry(std::size_t row, std::size_t col) const {
    return m_.at(row * dim_ + col);
  }

  Ket apply(const Ket& psi) const;          // O|psi>
  Ket apply_adjoint(const Ket& psi) const;  // O^dagger |psi>

  Operator adjoint() const;
  Operator multiply(const Operator& rhs) const;

  // max |(O^dagger O - I)_{ij}|
  double unitarity_residual() const;

 private:
  BasisPtr basis_;
  std::size_t dim_;
  std::vector<Complex> m_;
};

// Kronecker product over the product basis, first factor most significant.
Operator kron(const Operator& a, const Operator& b);
Operator kron(const Operator& a, const Operator& b, const Operator& c);

// <psi| O |psi>
Complex expectation(const Operator& op, const Ket& psi);

}  // namespace qsv
