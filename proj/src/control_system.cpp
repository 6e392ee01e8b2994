#include "gatesynth/control_system.hpp"

#include <cmath>
#include <sstream>

#include "gatesynth/errors.hpp"
#include "gatesynth/linalg.hpp"

namespace gatesynth {

namespace {
constexpr double kModelTol = 1e-10;
}

ControlSystem::ControlSystem(int n_qubits, std::vector<ComplexMatrix> hamiltonians,
                             std::vector<std::string> labels, std::vector<double> r_weights,
                             double tau, int n_steps, double epsilon)
    : n_qubits_(n_qubits),
      dim_(1 << n_qubits),
      hamiltonians_(std::move(hamiltonians)),
      labels_(std::move(labels)),
      r_weights_(std::move(r_weights)),
      tau_(tau),
      n_steps_(n_steps),
      epsilon_(epsilon) {
  if (n_qubits_ < 1) throw ConfigError("ControlSystem: n_qubits must be >= 1");
  if (hamiltonians_.empty()) throw ConfigError("ControlSystem: no control Hamiltonians");
  if (labels_.size() != hamiltonians_.size())
    throw ConfigError("ControlSystem: label count does not match Hamiltonian count");
  if (r_weights_.size() != hamiltonians_.size())
    throw ConfigError("ControlSystem: R diagonal length does not match Hamiltonian count");
  if (tau_ <= 0.0) throw ConfigError("ControlSystem: tau must be positive");
  if (n_steps_ < 1) throw ConfigError("ControlSystem: n_steps must be >= 1");
  if (epsilon_ <= 0.0) throw ConfigError("ControlSystem: epsilon must be positive");

  for (std::size_t k = 0; k < hamiltonians_.size(); ++k) {
    const auto& h = hamiltonians_[k];
    if (h.dim() != dim_) {
      std::ostringstream os;
      os << "ControlSystem: Hamiltonian " << labels_[k] << " has dimension " << h.dim()
         << ", expected " << dim_;
      throw ConfigError(os.str());
    }
    if (!is_hermitian(h, kModelTol)) {
      throw ConfigError("ControlSystem: Hamiltonian " + labels_[k] + " is not Hermitian");
    }
    if (std::abs(trace(h)) > kModelTol) {
      throw ConfigError("ControlSystem: Hamiltonian " + labels_[k] + " is not traceless");
    }
    if (r_weights_[k] <= 0.0) {
      throw ConfigError("ControlSystem: R entries must be strictly positive");
    }
  }
}

int DiscretizedControlSet::action_id(const ControlAction& a) const {
  for (int i = 0; i < cardinality(); ++i)
    if (actions[i] == a) return i;
  throw NumericError("DiscretizedControlSet: action not in set");
}

std::string DiscretizedControlSet::action_label(int id,
                                                const std::vector<std::string>& labels) const {
  const ControlAction& a = actions.at(id);
  if (a.is_zero()) return "0";
  return (a.sign > 0 ? "+" : "-") + labels.at(a.axis);
}

double running_cost(const ControlAction& action, const ControlSystem& sys) {
  if (action.is_zero()) return 0.0;
  if (action.axis >= sys.n_controls()) {
    throw NumericError("running_cost: axis index out of range");
  }
  return std::sqrt(sys.r_weights()[action.axis]) * sys.tau();
}

double terminal_penalty(const ComplexMatrix& u, const ControlSystem& sys) {
  if (u.dim() != sys.dim()) throw NumericError("terminal_penalty: dimension mismatch");
  return 2.0 * sys.dim() - 2.0 * trace(u).real();
}

DiscretizedControlSet build_control_set(const ControlSystem& sys, bool signed_controls) {
  DiscretizedControlSet set;
  set.dim = sys.dim();
  set.actions.push_back(ControlAction::zero());
  set.propagators.push_back(ComplexMatrix::identity(sys.dim()));
  set.step_costs.push_back(0.0);

  const std::vector<int> signs = signed_controls ? std::vector<int>{+1, -1} : std::vector<int>{+1};
  for (int s : signs) {
    for (int k = 0; k < sys.n_controls(); ++k) {
      const ControlAction a = ControlAction::axis_action(k, s);
      set.actions.push_back(a);
      ComplexMatrix prop = expm_skew(sys.hamiltonians()[k], sys.tau() * s);
      const double ur = unitarity_residual(prop);
      if (ur > 1e-10) {
        std::ostringstream os;
        os << "build_control_set: propagator for " << sys.labels()[k]
           << " not unitary, residual " << ur;
        throw NumericError(os.str());
      }
      set.propagators.push_back(std::move(prop));
      set.step_costs.push_back(running_cost(a, sys));
    }
  }
  return set;
}

ComplexMatrix pauli_string(const std::string& label) {
  if (label.empty()) throw ConfigError("pauli_string: empty label");
  ComplexMatrix out;
  for (char c : label) {
    Pauli p;
    switch (c) {
      case 'I': p = Pauli::I; break;
      case 'X': p = Pauli::X; break;
      case 'Y': p = Pauli::Y; break;
      case 'Z': p = Pauli::Z; break;
      default:
        throw ConfigError(std::string("pauli_string: bad character '") + c + "' in " + label);
    }
    out = out.dim() == 0 ? pauli(p) : kron(out, pauli(p));
  }
  return out;
}

ControlSystem build_su2_example(double tau, int n_steps, double epsilon) {
  std::vector<ComplexMatrix> h = {pauli(Pauli::X), pauli(Pauli::Z)};
  return ControlSystem(1, std::move(h), {"X", "Z"}, {1.0, 1.0}, tau, n_steps, epsilon);
}

ControlSystem build_su4_example(double r_ratio, double tau, int n_steps, double epsilon,
                                const std::string& two_body) {
  if (!(r_ratio > 0.0 && r_ratio <= 1.0))
    throw ConfigError("build_su4_example: r_ratio must be in (0, 1]");
  if (two_body != "XZ" && two_body != "XX")
    throw ConfigError("build_su4_example: two_body must be XZ or XX");
  std::vector<std::string> labels = {"IX", "IZ", "XI", "ZI", two_body};
  std::vector<ComplexMatrix> h;
  h.reserve(labels.size());
  for (const auto& l : labels) h.push_back(pauli_string(l));
  // Unit one-body weights; the two-body weight makes the step-cost ratio
  // sqrt(R_1)/sqrt(R_5) equal r_ratio.
  const double r5 = 1.0 / (r_ratio * r_ratio);
  return ControlSystem(2, std::move(h), std::move(labels), {1.0, 1.0, 1.0, 1.0, r5}, tau,
                       n_steps, epsilon);
}

}  // namespace gatesynth
