#include "ket.hpp"

#include <cmath>

namespace qsv {

Ket::Ket(BasisPtr basis, std::vector<Complex> amplitudes)
    : basis_(std::move(basis)), amps_(std::move(amplitudes)) {
  if (!basis_) throw InvalidArgument("ket requires a basis");
  if (basis_->size() != amps_.size()) {
    throw InvalidArgument("amplitude count must equal basis size");
  }
  for (const auto& a : amps_) {
    if (!is_finite(a)) throw InvalidArgument("ket amplitudes must be finite");
  }
}

Ket Ket::basis_state(BasisPtr basis, std::size_t index) {
  if (!basis || index >= basis->size()) {
    throw InvalidArgument("basis state index out of range");
  }
  std::vector<Complex> amps(basis->size(), Complex(0.0, 0.0));
  amps[index] = Complex(1.0, 0.0);
  return Ket(std::move(basis), std::move(amps));
}

double Ket::norm() const {
  double s = 0.0;
  for (const auto& a : amps_) s += std::norm(a);
  return std::sqrt(s);
}

Ket Ket::normalized() const {
  const double n = norm();
  if (n < 1e-12) throw InvalidArgument("cannot normalize a near-zero ket");
  std::vector<Complex> amps(amps_);
  for (auto& a : amps) a /= n;
  return Ket(basis_, std::move(amps));
}

Ket Ket::with_basis(BasisPtr basis) const {
  if (!basis || basis->size() != dim()) {
    throw InvalidArgument("replacement basis must have equal dimension");
  }
  return Ket(std::move(basis), amps_);
}

Complex inner(const Ket& bra, const Ket& ket) {
  if (bra.basis() != ket.basis()) {
    throw InvalidArgument("inner product requires matching bases");
  }
  Complex s(0.0, 0.0);
  for (std::size_t i = 0; i < bra.dim(); ++i) {
    s += std::conj(bra.amp(i)) * ket.amp(i);
  }
  return s;
}

double compat_prob(const Ket& a, const Ket& b) {
  return std::norm(inner(a, b));
}

Ket tensor(const Ket& a, const Ket& b) {
  BasisPtr basis = Basis::product(a.basis(), b.basis());
  std::vector<Complex> amps;
  amps.reserve(a.dim() * b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < b.dim(); ++j) {
      amps.push_back(a.amp(i) * b.amp(j));
    }
  }
  return Ket(std::move(basis), std::move(amps));
}

Ket tensor(std::span<const Ket> factors) {
  if (factors.empty()) {
    throw InvalidArgument("tensor product requires at least one factor");
  }
  Ket out = factors[0];
  for (std::size_t i = 1; i < factors.size(); ++i) {
    out = tensor(out, factors[i]);
  }
  return out;
}

}  // namespace qsv
