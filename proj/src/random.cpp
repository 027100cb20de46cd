#include "qridge/random.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qridge {

double uniform(Rng& rng, double lo, double hi) {
    std::uniform_real_distribution<double> u(lo, hi);
    return u(rng);
}

std::vector<double> random_theta(Rng& rng, std::size_t n) {
    std::vector<double> out(n);
    for (auto& t : out) t = uniform(rng, -std::numbers::pi, std::numbers::pi);
    return out;
}

StateVector random_state(Rng& rng, int n_qubits) {
    if (n_qubits < 1) throw std::invalid_argument("random_state: need at least one qubit");
    std::normal_distribution<double> g(0.0, 1.0);
    CVec amps(std::size_t{1} << n_qubits);
    for (auto& a : amps) a = cdouble(g(rng), g(rng));
    return build_state(std::move(amps));
}

CVec random_unit_row(Rng& rng, std::size_t dim) {
    if (dim < 1) throw std::invalid_argument("random_unit_row: empty row");
    std::normal_distribution<double> g(0.0, 1.0);
    CVec row(dim);
    double nrm = 0.0;
    do {
        for (auto& a : row) a = cdouble(g(rng), g(rng));
        nrm = vec_norm(row);
    } while (nrm == 0.0);
    for (auto& a : row) a /= nrm;
    return row;
}

MeasurementSelector random_selector(Rng& rng, std::size_t dim) {
    if (dim < 1) throw std::invalid_argument("random_selector: empty range");
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < dim; ++i)
        if (rng() & 1) idx.push_back(i);
    if (idx.empty()) idx.push_back(rng() % dim);
    return make_selector(std::move(idx), dim);
}

ParamCircuit random_circuit(Rng& rng, int n_qubits, int n_layers) {
    if (n_qubits < 1 || n_layers < 1)
        throw std::invalid_argument("random_circuit: need at least one qubit and layer");
    ParamCircuit c;
    c.n_qubits = n_qubits;
    int slot = 0;
    const GateKind rotations[3] = {GateKind::RX, GateKind::RY, GateKind::RZ};
    for (int layer = 0; layer < n_layers; ++layer) {
        for (int q = 0; q < n_qubits; ++q) {
            c.gates.push_back({rotations[rng() % 3], {q}, slot++});
            if (rng() % 4 == 0) c.gates.push_back({GateKind::H, {q}, std::nullopt});
        }
        if (n_qubits >= 2) {
            for (int q = 0; q < n_qubits; ++q) {
                const GateKind two = (rng() & 1) ? GateKind::CNOT : GateKind::CZ;
                c.gates.push_back({two, {q, (q + 1) % n_qubits}, std::nullopt});
            }
        }
    }
    c.n_params = slot;
    return c;
}

BlockRidgeModel random_block_model(Rng& rng, std::size_t dimension, std::size_t n_blocks) {
    if (!is_power_of_two(dimension) || dimension < 2)
        throw std::invalid_argument("random_block_model: dimension must be a power of two >= 2");
    if (n_blocks < 1 || n_blocks > dimension)
        throw std::invalid_argument("random_block_model: need 1 <= blocks <= dimension");
    const std::size_t n = static_cast<std::size_t>(std::countr_zero(dimension));
    std::vector<std::vector<double>> params(n_blocks);
    for (auto& p : params) p = random_theta(rng, 2 * n);
    return make_parameterized_block_model(std::move(params), dimension);
}

}  // namespace qridge
