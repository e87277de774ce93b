#pragma once

#include <array>
#include <string>

#include "direction.hpp"
#include "ket.hpp"
#include "spin.hpp"

namespace qsv::bell {

struct AxisPair {
  Direction a;
  Direction b;
};

// Joint outcome signs, each +1 or -1.
struct OutcomePair {
  int a_sign;
  int b_sign;
};

inline constexpr std::array<OutcomePair, 4> kOutcomeOrder = {
    OutcomePair{+1, +1}, OutcomePair{+1, -1}, OutcomePair{-1, +1},
    OutcomePair{-1, -1}};

// Two-spin product basis with tokens {+axis, -axis} per site.
BasisPtr pair_basis(const std::string& axis = "z");

// (|+,-> - |-,+>)/sqrt(2); the form is the same along any axis.
Ket singlet(const std::string& axis = "z");

// Tensor product of the one-site eigenspinors for the given outcome.
Ket joint_eigenvector(const AxisPair& axes, const OutcomePair& outcome);

struct TableEntry {
  OutcomePair outcome;
  double rho;  // |<outcome|state>|^2
};

struct HiddenVariableTable {
  std::array<TableEntry, 4> entries;
  double rho_sum;
};

// Weights of the four concurrent joint eigenvectors in `state`.
HiddenVariableTable hidden_variable_table(const AxisPair& axes,
                                          const Ket& state);
HiddenVariableTable hidden_variable_table(const AxisPair& axes);

// Sum over the table of rho * A * B.
double expectation_concurrent(const AxisPair& axes, const Ket& state);
double expectation_concurrent(const AxisPair& axes);

// <state| (sigma.a x sigma.b) |state>; the imaginary part must vanish.
double expectation_qm(const AxisPair& axes, const Ket& state);
double expectation_qm(const AxisPair& axes);

// Overlap probability between two joint outcomes; depends only on them.
double conditional_prob(const AxisPair& from_axes, const OutcomePair& from,
                        const AxisPair& to_axes, const OutcomePair& to);

}  // namespace qsv::bell
