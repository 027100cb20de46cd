// state.hpp
// Statevectors and selector measurements.
//
// Convention used throughout: qubit 0 is the most significant bit of the
// basis index, i.e. basis index i assigns qubit q the bit
// (i >> (n_qubits - 1 - q)) & 1. Under this ordering "qubit 0 measured in
// |0>" is exactly the first half of the amplitude vector.

#pragma once

#include "qridge/linalg.hpp"

#include <cstddef>
#include <vector>

namespace qridge {

struct StateVector {
    CVec amplitudes;
    int n_qubits = 0;

    std::size_t dim() const { return amplitudes.size(); }
};

bool is_power_of_two(std::size_t x);

/// Validates and renormalizes. Rejects zero vectors ("unnormalizable"),
/// non-finite entries and lengths that are not powers of two >= 2.
StateVector build_state(CVec amplitudes);

/// |j> on n qubits.
StateVector basis_state(int n_qubits, std::size_t j);

/// Sorted, duplicate-free set of basis indices whose probabilities are
/// summed on measurement.
struct MeasurementSelector {
    std::vector<std::size_t> indices;
};

/// Sorts and validates: non-empty, no duplicates, all indices < dim.
MeasurementSelector make_selector(std::vector<std::size_t> indices, std::size_t dim);

/// Indices {0, ..., 2^(n-1) - 1}: qubit 0 in |0> under the big-endian
/// ordering above.
MeasurementSelector first_qubit_zero_selector(int n_qubits);

MeasurementSelector full_selector(int n_qubits);

/// sum_{i in selector} |psi_i|^2, accumulated in selector (ascending) order.
double selector_expectation(const StateVector& state, const MeasurementSelector& sel);

}  // namespace qridge
