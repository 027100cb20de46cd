#include "qridge/circuit.hpp"
#include "qridge/random.hpp"

#include "oracle.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace qridge;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

double max_entry_diff(const CMatrix& a, const CMatrix& b) {
    REQUIRE(a.rows == b.rows);
    REQUIRE(a.cols == b.cols);
    double worst = 0.0;
    for (std::size_t i = 0; i < a.data.size(); ++i)
        worst = std::max(worst, std::abs(a.data[i] - b.data[i]));
    return worst;
}

}  // namespace

TEST_SUITE("circuit") {

TEST_CASE("hadamard on |0>") {
    const StateVector out = apply_gate(build_state({1.0, 0.0}), {GateKind::H, {0}, {}}, {});
    CHECK(std::abs(out.amplitudes[0].real() - kInvSqrt2) < 1e-15);
    CHECK(std::abs(out.amplitudes[1].real() - kInvSqrt2) < 1e-15);
}

TEST_CASE("RY(pi) maps |0> to |1>") {
    const StateVector out =
        apply_gate(build_state({1.0, 0.0}), {GateKind::RY, {0}, 0}, {std::numbers::pi});
    CHECK(std::abs(out.amplitudes[0]) < 1e-15);
    CHECK(std::abs(out.amplitudes[1] - cdouble(1.0, 0.0)) < 1e-15);
}

TEST_CASE("CNOT flips the target when the control is set") {
    // |10>: qubit 0 (most significant bit) is 1 -> index 2
    const StateVector out = apply_gate(basis_state(2, 2), {GateKind::CNOT, {0, 1}, {}}, {});
    CHECK(out.amplitudes[3] == cdouble(1.0, 0.0));
    CHECK(std::abs(out.amplitudes[2]) == 0.0);
}

TEST_CASE("gate validation") {
    const StateVector s = build_state({1.0, 0.0});
    CHECK_THROWS_AS(apply_gate(s, {GateKind::H, {1}, {}}, {}), std::invalid_argument);
    CHECK_THROWS_AS(apply_gate(s, {GateKind::RY, {0}, {}}, {}), std::invalid_argument);
    CHECK_THROWS_AS(apply_gate(basis_state(2, 0), {GateKind::CNOT, {1, 1}, {}}, {}),
                    std::invalid_argument);
}

TEST_CASE("empty circuit is the identity") {
    ParamCircuit c;
    c.n_qubits = 2;
    Rng rng(3);
    const StateVector x = random_state(rng, 2);
    const StateVector out = run_circuit(c, {}, x);
    for (std::size_t i = 0; i < x.dim(); ++i) CHECK(out.amplitudes[i] == x.amplitudes[i]);
}

TEST_CASE("single hadamard circuit") {
    ParamCircuit c;
    c.n_qubits = 1;
    c.gates.push_back({GateKind::H, {0}, {}});
    const StateVector out = run_circuit(c, {}, build_state({1.0, 0.0}));
    CHECK(std::abs(out.amplitudes[0].real() - kInvSqrt2) < 1e-15);
}

TEST_CASE("bell circuit H(0), CNOT(0,1)") {
    ParamCircuit c;
    c.n_qubits = 2;
    c.gates.push_back({GateKind::H, {0}, {}});
    c.gates.push_back({GateKind::CNOT, {0, 1}, {}});
    const StateVector out = run_circuit(c, {}, basis_state(2, 0));
    CHECK(std::abs(out.amplitudes[0].real() - kInvSqrt2) < 1e-15);
    CHECK(std::abs(out.amplitudes[1]) < 1e-15);
    CHECK(std::abs(out.amplitudes[2]) < 1e-15);
    CHECK(std::abs(out.amplitudes[3].real() - kInvSqrt2) < 1e-15);
}

TEST_CASE("run_circuit rejects mismatched inputs") {
    ParamCircuit c = hardware_efficient_ansatz(2, 1);
    CHECK_THROWS_AS(run_circuit(c, {0.1}, basis_state(2, 0)), std::invalid_argument);
    const std::vector<double> theta(static_cast<std::size_t>(c.n_params), 0.1);
    CHECK_THROWS_AS(run_circuit(c, theta, basis_state(3, 0)), std::invalid_argument);
}

TEST_CASE("circuit validation catches broken structures") {
    ParamCircuit c;
    c.n_qubits = 1;
    c.n_params = 2;
    c.gates.push_back({GateKind::RX, {0}, 0});
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);  // slot 1 never referenced
}

TEST_CASE("unitary of the empty circuit is the identity") {
    ParamCircuit c;
    c.n_qubits = 1;
    const CMatrix w = circuit_unitary(c, {});
    CHECK(max_entry_diff(w, CMatrix::identity(2)) == 0.0);
}

TEST_CASE("unitary of RY(pi)") {
    ParamCircuit c;
    c.n_qubits = 1;
    c.n_params = 1;
    c.gates.push_back({GateKind::RY, {0}, 0});
    const CMatrix w = circuit_unitary(c, {std::numbers::pi});
    CHECK(std::abs(w.at(0, 0)) < 1e-15);
    CHECK(std::abs(w.at(0, 1) - cdouble(-1.0, 0.0)) < 1e-15);
    CHECK(std::abs(w.at(1, 0) - cdouble(1.0, 0.0)) < 1e-15);
    CHECK(std::abs(w.at(1, 1)) < 1e-15);
}

TEST_CASE("random circuits produce unitaries") {
    Rng rng(17);
    for (int t = 0; t < 30; ++t) {
        const int n = 1 + static_cast<int>(rng() % 4);
        const ParamCircuit c = random_circuit(rng, n, 4);
        const auto theta = random_theta(rng, static_cast<std::size_t>(c.n_params));
        CHECK(unitarity_defect(circuit_unitary(c, theta)) < 1e-10);
    }
}

TEST_CASE("unitary columns agree with run_circuit") {
    Rng rng(23);
    for (int t = 0; t < 25; ++t) {
        const int n = 1 + static_cast<int>(rng() % 4);
        const ParamCircuit c = random_circuit(rng, n, 3);
        const auto theta = random_theta(rng, static_cast<std::size_t>(c.n_params));
        const CMatrix w = circuit_unitary(c, theta);
        const StateVector x = random_state(rng, n);
        const CVec wx = matvec(w, x.amplitudes);
        const StateVector direct = run_circuit(c, theta, x);
        for (std::size_t i = 0; i < wx.size(); ++i)
            CHECK(std::abs(wx[i] - direct.amplitudes[i]) < 1e-12);
    }
}

TEST_CASE("norm is preserved across random circuits") {
    Rng rng(29);
    for (int t = 0; t < 200; ++t) {
        const int n = 1 + static_cast<int>(rng() % 6);
        const ParamCircuit c = random_circuit(rng, n, 3);
        const auto theta = random_theta(rng, static_cast<std::size_t>(c.n_params));
        const StateVector out = run_circuit(c, theta, random_state(rng, n));
        CHECK(std::abs(vec_norm(out.amplitudes) - 1.0) < 1e-12);
    }
}

TEST_CASE("matches the dense kron oracle") {
    Rng rng(31);
    for (int t = 0; t < 40; ++t) {
        const int n = 1 + static_cast<int>(rng() % 4);
        const ParamCircuit c = random_circuit(rng, n, 3);
        const auto theta = random_theta(rng, static_cast<std::size_t>(c.n_params));
        CHECK(max_entry_diff(circuit_unitary(c, theta), oracle::circuit_matrix(c, theta)) < 1e-12);

        const StateVector x = random_state(rng, n);
        const CVec ref = oracle::apply_circuit(c, theta, x.amplitudes);
        const StateVector got = run_circuit(c, theta, x);
        for (std::size_t i = 0; i < ref.size(); ++i)
            CHECK(std::abs(ref[i] - got.amplitudes[i]) < 1e-12);
    }
}

TEST_CASE("hardware-efficient ansatz shape") {
    const ParamCircuit c = hardware_efficient_ansatz(3, 2);
    CHECK(c.n_params == 12);
    CHECK_NOTHROW(c.validate());
    const auto theta = std::vector<double>(12, 0.3);
    CHECK(unitarity_defect(circuit_unitary(c, theta)) < 1e-10);
}

TEST_CASE("circuit_unitary caps the qubit count") {
    ParamCircuit c;
    c.n_qubits = 11;
    CHECK_THROWS_AS(circuit_unitary(c, {}), std::invalid_argument);
}

}  // TEST_SUITE
