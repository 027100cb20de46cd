// random.hpp
// Seeded generators for circuits, states and models. Everything downstream
// is deterministic given the generator state, so equal seeds reproduce runs
// bit for bit.

#pragma once

#include "qridge/block.hpp"
#include "qridge/circuit.hpp"

#include <random>

namespace qridge {

using Rng = std::mt19937_64;

double uniform(Rng& rng, double lo, double hi);

std::vector<double> random_theta(Rng& rng, std::size_t n);

/// Complex Gaussian amplitudes, normalized.
StateVector random_state(Rng& rng, int n_qubits);

CVec random_unit_row(Rng& rng, std::size_t dim);

/// Non-empty random subset of {0, ..., dim-1}.
MeasurementSelector random_selector(Rng& rng, std::size_t dim);

/// Layered random circuit: per layer each qubit gets a random rotation
/// (fresh parameter slot) optionally followed by H, then a CNOT/CZ ring for
/// n >= 2. Parameter slots are gate-unique by construction.
ParamCircuit random_circuit(Rng& rng, int n_qubits, int n_layers);

BlockRidgeModel random_block_model(Rng& rng, std::size_t dimension, std::size_t n_blocks);

}  // namespace qridge
