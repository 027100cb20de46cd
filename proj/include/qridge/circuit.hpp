// circuit.hpp
// Parameterized gate circuits and their dense unitaries.

#pragma once

#include "qridge/state.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qridge {

enum class GateKind { RX, RY, RZ, H, CNOT, CZ };

bool gate_is_rotation(GateKind k);
int gate_arity(GateKind k);
std::string gate_name(GateKind k);
GateKind gate_from_name(const std::string& name);

struct GateOp {
    GateKind kind;
    std::vector<int> targets;
    std::optional<int> param_index;  // present iff kind is a rotation
};

/// Ordered gate list over n_qubits with n_params distinct angle slots.
/// Rotations implement RG(phi) = exp(-i phi G / 2) for G in {X, Y, Z}.
struct ParamCircuit {
    int n_qubits = 0;
    std::vector<GateOp> gates;
    int n_params = 0;

    /// Throws std::invalid_argument on any broken structural invariant.
    void validate() const;
};

/// Layered hardware-efficient ansatz: per layer, RY then RZ on every qubit
/// followed by a CNOT ring q -> q+1 (ring skipped for n = 1). Every rotation
/// gets a fresh parameter slot, so n_params = 2 * n_qubits * n_layers.
ParamCircuit hardware_efficient_ansatz(int n_qubits, int n_layers);

StateVector apply_gate(const StateVector& state, const GateOp& gate,
                       const std::vector<double>& theta);

StateVector run_circuit(const ParamCircuit& circuit, const std::vector<double>& theta,
                        const StateVector& input);

/// Dense N x N unitary of the circuit; column j is the circuit applied to
/// |j>. Capped at 10 qubits (dense storage).
CMatrix circuit_unitary(const ParamCircuit& circuit, const std::vector<double>& theta);

}  // namespace qridge
