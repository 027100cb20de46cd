#include "qridge/circuit.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qridge {

bool gate_is_rotation(GateKind k) {
    return k == GateKind::RX || k == GateKind::RY || k == GateKind::RZ;
}

int gate_arity(GateKind k) { return (k == GateKind::CNOT || k == GateKind::CZ) ? 2 : 1; }

std::string gate_name(GateKind k) {
    switch (k) {
        case GateKind::RX: return "RX";
        case GateKind::RY: return "RY";
        case GateKind::RZ: return "RZ";
        case GateKind::H: return "H";
        case GateKind::CNOT: return "CNOT";
        case GateKind::CZ: return "CZ";
    }
    throw std::logic_error("gate_name: unknown kind");
}

GateKind gate_from_name(const std::string& name) {
    if (name == "RX") return GateKind::RX;
    if (name == "RY") return GateKind::RY;
    if (name == "RZ") return GateKind::RZ;
    if (name == "H") return GateKind::H;
    if (name == "CNOT") return GateKind::CNOT;
    if (name == "CZ") return GateKind::CZ;
    throw std::invalid_argument("unknown gate kind: " + name);
}

namespace {

void validate_gate(const GateOp& g, int n_qubits, int n_params) {
    const int arity = gate_arity(g.kind);
    if (static_cast<int>(g.targets.size()) != arity)
        throw std::invalid_argument("gate " + gate_name(g.kind) + " expects " +
                                    std::to_string(arity) + " target(s)");
    for (int t : g.targets)
        if (t < 0 || t >= n_qubits)
            throw std::invalid_argument("gate target " + std::to_string(t) + " out of range");
    if (arity == 2 && g.targets[0] == g.targets[1])
        throw std::invalid_argument("two-qubit gate targets must be distinct");
    if (gate_is_rotation(g.kind)) {
        if (!g.param_index)
            throw std::invalid_argument("rotation gate " + gate_name(g.kind) + " needs param_index");
        if (*g.param_index < 0 || *g.param_index >= n_params)
            throw std::invalid_argument("param_index " + std::to_string(*g.param_index) +
                                        " out of range");
    } else if (g.param_index) {
        throw std::invalid_argument("gate " + gate_name(g.kind) + " takes no param_index");
    }
}

// In-place application; callers have validated the gate already.
void apply_gate_inplace(CVec& a, int n_qubits, const GateOp& g, const std::vector<double>& theta) {
    const std::size_t dim = a.size();
    if (gate_arity(g.kind) == 1) {
        cdouble u00, u01, u10, u11;
        switch (g.kind) {
            case GateKind::H: {
                const double s = 1.0 / std::sqrt(2.0);
                u00 = s; u01 = s; u10 = s; u11 = -s;
                break;
            }
            case GateKind::RX: {
                const double phi = theta[static_cast<std::size_t>(*g.param_index)];
                const double c = std::cos(phi / 2.0), s = std::sin(phi / 2.0);
                u00 = c; u01 = cdouble(0.0, -s); u10 = cdouble(0.0, -s); u11 = c;
                break;
            }
            case GateKind::RY: {
                const double phi = theta[static_cast<std::size_t>(*g.param_index)];
                const double c = std::cos(phi / 2.0), s = std::sin(phi / 2.0);
                u00 = c; u01 = -s; u10 = s; u11 = c;
                break;
            }
            case GateKind::RZ: {
                const double phi = theta[static_cast<std::size_t>(*g.param_index)];
                u00 = std::polar(1.0, -phi / 2.0); u01 = 0.0;
                u10 = 0.0; u11 = std::polar(1.0, phi / 2.0);
                break;
            }
            default:
                throw std::logic_error("apply_gate_inplace: bad one-qubit kind");
        }
        // qubit q lives at bit position n - 1 - q of the basis index
        const std::size_t step = std::size_t{1} << (n_qubits - 1 - g.targets[0]);
        for (std::size_t base = 0; base < dim; base += 2 * step) {
            for (std::size_t i = base; i < base + step; ++i) {
                const cdouble a0 = a[i];
                const cdouble a1 = a[i + step];
                a[i] = u00 * a0 + u01 * a1;
                a[i + step] = u10 * a0 + u11 * a1;
            }
        }
        return;
    }

    const std::size_t cbit = std::size_t{1} << (n_qubits - 1 - g.targets[0]);
    const std::size_t tbit = std::size_t{1} << (n_qubits - 1 - g.targets[1]);
    if (g.kind == GateKind::CNOT) {
        for (std::size_t i = 0; i < dim; ++i)
            if ((i & cbit) && !(i & tbit)) std::swap(a[i], a[i | tbit]);
    } else {  // CZ
        for (std::size_t i = 0; i < dim; ++i)
            if ((i & cbit) && (i & tbit)) a[i] = -a[i];
    }
}

}  // namespace

void ParamCircuit::validate() const {
    if (n_qubits < 1) throw std::invalid_argument("circuit needs at least one qubit");
    if (n_params < 0) throw std::invalid_argument("n_params must be non-negative");
    std::vector<int> uses(static_cast<std::size_t>(n_params), 0);
    for (const auto& g : gates) {
        validate_gate(g, n_qubits, n_params);
        if (g.param_index) ++uses[static_cast<std::size_t>(*g.param_index)];
    }
    for (std::size_t j = 0; j < uses.size(); ++j)
        if (uses[j] == 0)
            throw std::invalid_argument("parameter slot " + std::to_string(j) +
                                        " is never referenced");
}

ParamCircuit hardware_efficient_ansatz(int n_qubits, int n_layers) {
    if (n_qubits < 1) throw std::invalid_argument("ansatz needs at least one qubit");
    if (n_layers < 1) throw std::invalid_argument("ansatz needs at least one layer");
    ParamCircuit c;
    c.n_qubits = n_qubits;
    int slot = 0;
    for (int layer = 0; layer < n_layers; ++layer) {
        for (int q = 0; q < n_qubits; ++q) {
            c.gates.push_back({GateKind::RY, {q}, slot++});
            c.gates.push_back({GateKind::RZ, {q}, slot++});
        }
        if (n_qubits >= 2)
            for (int q = 0; q < n_qubits; ++q)
                c.gates.push_back({GateKind::CNOT, {q, (q + 1) % n_qubits}, std::nullopt});
    }
    c.n_params = slot;
    return c;
}

StateVector apply_gate(const StateVector& state, const GateOp& gate,
                       const std::vector<double>& theta) {
    validate_gate(gate, state.n_qubits, static_cast<int>(theta.size()));
    StateVector out = state;
    apply_gate_inplace(out.amplitudes, out.n_qubits, gate, theta);
    return out;
}

StateVector run_circuit(const ParamCircuit& circuit, const std::vector<double>& theta,
                        const StateVector& input) {
    circuit.validate();
    if (static_cast<int>(theta.size()) != circuit.n_params)
        throw std::invalid_argument("run_circuit: expected " + std::to_string(circuit.n_params) +
                                    " parameters, got " + std::to_string(theta.size()));
    if (input.n_qubits != circuit.n_qubits)
        throw std::invalid_argument("run_circuit: state/circuit qubit count mismatch");
    StateVector out = input;
    for (const auto& g : circuit.gates) apply_gate_inplace(out.amplitudes, out.n_qubits, g, theta);
    return out;
}

CMatrix circuit_unitary(const ParamCircuit& circuit, const std::vector<double>& theta) {
    circuit.validate();
    if (static_cast<int>(theta.size()) != circuit.n_params)
        throw std::invalid_argument("circuit_unitary: parameter count mismatch");
    if (circuit.n_qubits > 10)
        throw std::invalid_argument("circuit_unitary: capped at 10 qubits (dense storage)");
    const std::size_t dim = std::size_t{1} << circuit.n_qubits;
    CMatrix w(dim, dim);
    CVec col(dim);
    for (std::size_t j = 0; j < dim; ++j) {
        std::fill(col.begin(), col.end(), cdouble{});
        col[j] = 1.0;
        for (const auto& g : circuit.gates) apply_gate_inplace(col, circuit.n_qubits, g, theta);
        for (std::size_t i = 0; i < dim; ++i) w.at(i, j) = col[i];
    }
    return w;
}

}  // namespace qridge
