#include "qridge/state.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qridge {

bool is_power_of_two(std::size_t x) { return x != 0 && (x & (x - 1)) == 0; }

StateVector build_state(CVec amplitudes) {
    if (amplitudes.size() < 2 || !is_power_of_two(amplitudes.size()))
        throw std::invalid_argument("build_state: length must be a power of two >= 2");
    for (const auto& a : amplitudes)
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
            throw std::invalid_argument("build_state: non-finite amplitude");
    const double norm = vec_norm(amplitudes);
    if (norm == 0.0) throw std::invalid_argument("build_state: unnormalizable zero vector");
    for (auto& a : amplitudes) a /= norm;
    StateVector s;
    s.n_qubits = std::countr_zero(amplitudes.size());
    s.amplitudes = std::move(amplitudes);
    return s;
}

StateVector basis_state(int n_qubits, std::size_t j) {
    if (n_qubits < 1) throw std::invalid_argument("basis_state: need at least one qubit");
    const std::size_t dim = std::size_t{1} << n_qubits;
    if (j >= dim) throw std::invalid_argument("basis_state: index out of range");
    StateVector s;
    s.n_qubits = n_qubits;
    s.amplitudes.assign(dim, 0.0);
    s.amplitudes[j] = 1.0;
    return s;
}

MeasurementSelector make_selector(std::vector<std::size_t> indices, std::size_t dim) {
    if (indices.empty()) throw std::invalid_argument("selector must be non-empty");
    std::sort(indices.begin(), indices.end());
    if (std::adjacent_find(indices.begin(), indices.end()) != indices.end())
        throw std::invalid_argument("selector contains duplicate indices");
    if (indices.back() >= dim) throw std::invalid_argument("selector index out of range");
    return MeasurementSelector{std::move(indices)};
}

MeasurementSelector first_qubit_zero_selector(int n_qubits) {
    if (n_qubits < 1) throw std::invalid_argument("first_qubit_zero_selector: need at least one qubit");
    const std::size_t half = std::size_t{1} << (n_qubits - 1);
    MeasurementSelector sel;
    sel.indices.resize(half);
    for (std::size_t i = 0; i < half; ++i) sel.indices[i] = i;
    return sel;
}

MeasurementSelector full_selector(int n_qubits) {
    if (n_qubits < 1) throw std::invalid_argument("full_selector: need at least one qubit");
    const std::size_t dim = std::size_t{1} << n_qubits;
    MeasurementSelector sel;
    sel.indices.resize(dim);
    for (std::size_t i = 0; i < dim; ++i) sel.indices[i] = i;
    return sel;
}

double selector_expectation(const StateVector& state, const MeasurementSelector& sel) {
    if (sel.indices.empty()) throw std::invalid_argument("selector must be non-empty");
    double acc = 0.0;
    for (std::size_t idx : sel.indices) {
        if (idx >= state.dim())
            throw std::invalid_argument("selector_expectation: index " + std::to_string(idx) +
                                        " out of range for dimension " + std::to_string(state.dim()));
        acc += std::norm(state.amplitudes[idx]);
    }
    return acc;
}

}  // namespace qridge
