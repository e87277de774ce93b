#include "dense_operator.hpp"

#include <cmath>

namespace qsv {

Operator::Operator(BasisPtr basis, std::vector<Complex> row_major,
                   bool require_unitary, double check_tol)
    : basis_(std::move(basis)), m_(std::move(row_major)) {
  if (!basis_) throw InvalidArgument("operator requires a basis");
  dim_ = basis_->size();
  if (m_.size() != dim_ * dim_) {
    throw InvalidArgument("operator matrix must be square over the basis");
  }
  for (const auto& z : m_) {
    if (!is_finite(z)) throw InvalidArgument("operator entries must be finite");
  }
  if (require_unitary) {
    const double r = unitarity_residual();
    if (r >= check_tol) {
      throw CheckFailure("operator flagged unitary fails the check, residual " +
                         std::to_string(r));
    }
  }
}

Operator Operator::identity(BasisPtr basis) {
  const std::size_t n = basis->size();
  std::vector<Complex> m(n * n, Complex(0.0, 0.0));
  for (std::size_t i = 0; i < n; ++i) m[i * n + i] = Complex(1.0, 0.0);
  return Operator(std::move(basis), std::move(m));
}

Operator Operator::zero(BasisPtr basis) {
  const std::size_t n = basis->size();
  return Operator(std::move(basis),
                  std::vector<Complex>(n * n, Complex(0.0, 0.0)));
}

Ket Operator::apply(const Ket& psi) const {
  if (psi.basis() != *basis_) {
    throw InvalidArgument("operator and ket bases must match");
  }
  std::vector<Complex> out(dim_, Complex(0.0, 0.0));
  for (std::size_t r = 0; r < dim_; ++r) {
    Complex s(0.0, 0.0);
    for (std::size_t c = 0; c < dim_; ++c) s += m_[r * dim_ + c] * psi.amp(c);
    out[r] = s;
  }
  return Ket(basis_, std::move(out));
}

Ket Operator::apply_adjoint(const Ket& psi) const {
  if (psi.basis() != *basis_) {
    throw InvalidArgument("operator and ket bases must match");
  }
  std::vector<Complex> out(dim_, Complex(0.0, 0.0));
  for (std::size_t r = 0; r < dim_; ++r) {
    Complex s(0.0, 0.0);
    for (std::size_t c = 0; c < dim_; ++c) {
      s += std::conj(m_[c * dim_ + r]) * psi.amp(c);
    }
    out[r] = s;
  }
  return Ket(basis_, std::move(out));
}

Operator Operator::adjoint() const {
  std::vector<Complex> m(dim_ * dim_);
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) {
      m[r * dim_ + c] = std::conj(m_[c * dim_ + r]);
    }
  }
  return Operator(basis_, std::move(m));
}

Operator Operator::multiply(const Operator& rhs) const {
  if (*basis_ != rhs.basis()) {
    throw InvalidArgument("operator product requires matching bases");
  }
  std::vector<Complex> m(dim_ * dim_, Complex(0.0, 0.0));
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t k = 0; k < dim_; ++k) {
      const Complex a = m_[r * dim_ + k];
      if (a == Complex(0.0, 0.0)) continue;
      for (std::size_t c = 0; c < dim_; ++c) {
        m[r * dim_ + c] += a * rhs.m_[k * dim_ + c];
      }
    }
  }
  return Operator(basis_, std::move(m));
}

double Operator::unitarity_residual() const {
  const Operator p = adjoint().multiply(*this);
  double worst = 0.0;
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) {
      const Complex want = (r == c) ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
      worst = std::fmax(worst, std::abs(p.entry(r, c) - want));
    }
  }
  return worst;
}

Operator kron(const Operator& a, const Operator& b) {
  BasisPtr basis = Basis::product(a.basis(), b.basis());
  const std::size_t na = a.dim();
  const std::size_t nb = b.dim();
  const std::size_t n = na * nb;
  std::vector<Complex> m(n * n);
  for (std::size_t ra = 0; ra < na; ++ra) {
    for (std::size_t rb = 0; rb < nb; ++rb) {
      for (std::size_t ca = 0; ca < na; ++ca) {
        for (std::size_t cb = 0; cb < nb; ++cb) {
          m[(ra * nb + rb) * n + (ca * nb + cb)] =
              a.entry(ra, ca) * b.entry(rb, cb);
        }
      }
    }
  }
  return Operator(std::move(basis), std::move(m));
}

Operator kron(const Operator& a, const Operator& b, const Operator& c) {
  return kron(kron(a, b), c);
}

Complex expectation(const Operator& op, const Ket& psi) {
  return inner(psi, op.apply(psi));
}

}  // namespace qsv
