#include "bell.hpp"

#include <cmath>

#include "dense_operator.hpp"

namespace qsv::bell {
namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

int check_sign(int s) {
  if (s != 1 && s != -1) throw InvalidArgument("outcome signs must be +1 or -1");
  return s;
}

}  // namespace

BasisPtr pair_basis(const std::string& axis) {
  const BasisPtr site = spin_site_basis(axis);
  return Basis::product(*site, *site);
}

Ket singlet(const std::string& axis) {
  return Ket(pair_basis(axis),
             {Complex(0.0, 0.0), Complex(kInvSqrt2, 0.0),
              Complex(-kInvSqrt2, 0.0), Complex(0.0, 0.0)});
}

Ket joint_eigenvector(const AxisPair& axes, const OutcomePair& outcome) {
  return tensor(eigenspinor(axes.a, check_sign(outcome.a_sign)),
                eigenspinor(axes.b, check_sign(outcome.b_sign)));
}

HiddenVariableTable hidden_variable_table(const AxisPair& axes,
                                          const Ket& state) {
  HiddenVariableTable table{};
  double sum = 0.0;
  for (std::size_t i = 0; i < kOutcomeOrder.size(); ++i) {
    const OutcomePair& oc = kOutcomeOrder[i];
    const double rho = compat_prob(joint_eigenvector(axes, oc), state);
    table.entries[i] = TableEntry{oc, rho};
    sum += rho;
  }
  table.rho_sum = sum;
  return table;
}

HiddenVariableTable hidden_variable_table(const AxisPair& axes) {
  return hidden_variable_table(axes, singlet());
}

double expectation_concurrent(const AxisPair& axes, const Ket& state) {
  const HiddenVariableTable table = hidden_variable_table(axes, state);
  double e = 0.0;
  for (const auto& entry : table.entries) {
    e += entry.rho * entry.outcome.a_sign * entry.outcome.b_sign;
  }
  return e;
}

double expectation_concurrent(const AxisPair& axes) {
  return expectation_concurrent(axes, singlet());
}

double expectation_qm(const AxisPair& axes, const Ket& state) {
  const Operator joint = kron(sigma_dot_n(axes.a), sigma_dot_n(axes.b));
  const Complex e = expectation(joint, state);
  if (std::abs(e.imag()) >= 1e-12) {
    throw CheckFailure("correlation expectation has a nonreal part");
  }
  return e.real();
}

double expectation_qm(const AxisPair& axes) {
  return expectation_qm(axes, singlet());
}

double conditional_prob(const AxisPair& from_axes, const OutcomePair& from,
                        const AxisPair& to_axes, const OutcomePair& to) {
  return compat_prob(joint_eigenvector(to_axes, to),
                     joint_eigenvector(from_axes, from));
}

}  // namespace qsv::bell
