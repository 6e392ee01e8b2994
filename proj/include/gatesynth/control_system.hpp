#pragma once

#include <string>
#include <vector>

#include "gatesynth/complex_matrix.hpp"

namespace gatesynth {

/// One discretized control choice over a time step: either the zero control
/// (coast) or a single axis driven at unit magnitude with a sign.
struct ControlAction {
  int axis = -1;  // 0-based Hamiltonian index; -1 for the zero control
  int sign = 0;   // +1 or -1 for axis actions, 0 for the zero control

  static ControlAction zero() { return {}; }
  static ControlAction axis_action(int axis, int sign) { return {axis, sign}; }
  bool is_zero() const { return axis < 0; }
  bool operator==(const ControlAction&) const = default;
};

/// The control problem instance: available Hamiltonians, diagonal control
/// weights, step size, horizon and the terminal penalty weight.
class ControlSystem {
 public:
  /// Validates the instance: every Hamiltonian Hermitian and traceless within
  /// 1e-10, R strictly positive, dim = 2^n, tau > 0, n_steps >= 1,
  /// epsilon > 0. Throws ConfigError otherwise.
  ControlSystem(int n_qubits, std::vector<ComplexMatrix> hamiltonians,
                std::vector<std::string> labels, std::vector<double> r_weights,
                double tau, int n_steps, double epsilon);

  int n_qubits() const { return n_qubits_; }
  int dim() const { return dim_; }
  int n_controls() const { return static_cast<int>(hamiltonians_.size()); }
  const std::vector<ComplexMatrix>& hamiltonians() const { return hamiltonians_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<double>& r_weights() const { return r_weights_; }
  double tau() const { return tau_; }
  int n_steps() const { return n_steps_; }
  double horizon() const { return tau_ * n_steps_; }
  double epsilon() const { return epsilon_; }

 private:
  int n_qubits_;
  int dim_;
  std::vector<ComplexMatrix> hamiltonians_;
  std::vector<std::string> labels_;
  std::vector<double> r_weights_;
  double tau_;
  int n_steps_;
  double epsilon_;
};

/// The per-step action alphabet with precomputed propagators and step costs.
/// Action order is canonical and stable: zero first, then +e_1..+e_M, then
/// -e_1..-e_M when signed actions are enabled. The all-zero lineage therefore
/// always occupies bank slot 0.
struct DiscretizedControlSet {
  std::vector<ControlAction> actions;
  std::vector<ComplexMatrix> propagators;  // exp(-i tau s H_k); exact identity for zero
  std::vector<double> step_costs;          // sqrt(R_k) * tau; 0 for zero
  int dim = 0;

  int cardinality() const { return static_cast<int>(actions.size()); }
  /// Canonical id of an action within this set (its index).
  int action_id(const ControlAction& a) const;
  std::string action_label(int id, const std::vector<std::string>& labels) const;
};

/// sqrt(v^T R v) * tau for one step of the given action (0 for the zero
/// control). Throws on an out-of-range axis.
double running_cost(const ControlAction& action, const ControlSystem& sys);

/// phi(u) = 2d - 2 Re tr(u); nonnegative, zero only at the identity.
double terminal_penalty(const ComplexMatrix& u, const ControlSystem& sys);

/// Builds the discretized action set for sys, with or without the negative
/// axis directions.
DiscretizedControlSet build_control_set(const ControlSystem& sys, bool signed_controls);

/// Single-qubit instance with sigma_x and sigma_z controls, R = (1,1).
/// Small enough for exhaustive enumeration; the reference test instance.
ControlSystem build_su2_example(double tau = 0.2, int n_steps = 6, double epsilon = 0.1);

/// Two-qubit instance with four one-body controls and one two-body control.
/// r_ratio in (0,1] is the one-body to two-body step-cost ratio, realized as
/// R_5 = 1/r^2. two_body selects the two-body Hamiltonian label ("XZ" or "XX").
ControlSystem build_su4_example(double r_ratio, double tau = 0.2, int n_steps = 20,
                                double epsilon = 0.1, const std::string& two_body = "XZ");

/// Parses a Pauli tensor label such as "X", "IZ" or "XX" into the
/// corresponding 2^n x 2^n Hermitian matrix.
ComplexMatrix pauli_string(const std::string& label);

}  // namespace gatesynth
