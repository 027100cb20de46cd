// train.hpp
// Shared full-batch gradient-descent harness for the four model families,
// plus input encoding, gradient rules and the block-locality experiment.

#pragma once

#include "qridge/block.hpp"
#include "qridge/circuit.hpp"
#include "qridge/dataset.hpp"
#include "qridge/fourier.hpp"
#include "qridge/ridge.hpp"
#include "qridge/xnn.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace qridge {

struct TrainConfig {
    double learning_rate = 0.1;
    int epochs = 200;
    std::uint64_t seed = 42;
    double fd_step = 1e-5;
    int log_every = 0;  // 0 disables progress lines

    void validate() const;
};

using LossHistory = std::vector<double>;  // one entry per epoch, after the update

/// Amplitude encoding: pad with zeros to 2^n, divide by the input norm. The
/// pre-normalization norm is kept so callers can stay scale-aware.
struct AmplitudeEncoded {
    StateVector state;
    double input_norm = 0.0;
};

AmplitudeEncoded encode_input(const std::vector<double>& x, int n_qubits);

double mse_loss(const std::vector<double>& predictions, const std::vector<double>& targets);

/// Exact gradient of selector_expectation w.r.t. each rotation angle via the
/// two-point rule at theta_j +- pi/2. Requires every parameter slot to be
/// used by exactly one gate.
std::vector<double> parameter_shift_gradient(const ParamCircuit& circuit,
                                             const std::vector<double>& theta,
                                             const MeasurementSelector& sel,
                                             const StateVector& x);

/// Central differences per coordinate; the reference gradient for every
/// analytic/shift-rule check in the test suites.
std::vector<double> finite_diff_gradient(const std::function<double(const std::vector<double>&)>& f,
                                         std::vector<double> theta, double step);

/// A circuit treated as a trainable model: structure, angles and the
/// measured selector.
struct CircuitModel {
    ParamCircuit circuit;
    std::vector<double> theta;
    MeasurementSelector selector;
};

double circuit_model_eval(const CircuitModel& m, const StateVector& x);

template <class M>
struct Trained {
    M model;
    LossHistory history;
    double initial_loss = 0.0;
};

Trained<CircuitModel> train_circuit(CircuitModel m, const Dataset& data, const TrainConfig& cfg);
Trained<BlockRidgeModel> train_block(BlockRidgeModel m, const Dataset& data,
                                     const TrainConfig& cfg);
Trained<FourierRidgeModel> train_fourier(FourierRidgeModel m, const Dataset& data,
                                         const TrainConfig& cfg);
Trained<XnnModel> train_xnn(XnnModel m, const Dataset& data, const TrainConfig& cfg);

/// Per-term contributions before and after a single-block perturbation.
/// Off-block terms must be unchanged bit for bit; the perturbed term must
/// change whenever delta is nonzero.
struct LocalityReport {
    std::size_t block = 0;
    std::vector<double> delta;
    std::vector<double> before;
    std::vector<double> after;
    std::vector<double> abs_change;
    bool off_block_unchanged = false;
    bool perturbed_term_changed = false;
    bool pass = false;
};

/// Comparison core, split out so corrupted before/after pairs can be fed
/// through the same check (negative controls).
LocalityReport compare_contributions(std::size_t block, const std::vector<double>& delta,
                                     const std::vector<double>& before,
                                     const std::vector<double>& after);

LocalityReport locality_experiment(const BlockRidgeModel& model, const StateVector& x,
                                   std::size_t block, const std::vector<double>& delta);

}  // namespace qridge
