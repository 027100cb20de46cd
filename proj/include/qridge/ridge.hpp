// ridge.hpp
// Ridge-function view of a measured circuit: the selected rows <w_i| of the
// circuit unitary act as independent ridge directions, and the measured
// value decomposes as sum_i |<w_i|x>|^2.

#pragma once

#include "qridge/circuit.hpp"

#include <vector>

namespace qridge {

/// One ridge direction: a row of a unitary, stored as the bra coefficients.
struct RidgeTerm {
    CVec direction;
    std::size_t source_index = 0;
};

struct RidgeDecomposition {
    std::vector<RidgeTerm> terms;  // one per selector index, in selector order
    std::size_t dimension = 0;
    MeasurementSelector selector;
};

/// Rows of w at the selector indices. Rejects non-unitary input
/// (defect >= 1e-10).
RidgeDecomposition extract_rows(const CMatrix& w, const MeasurementSelector& sel);

/// Per-term values |<w_i|x>|^2 in selector order.
std::vector<double> term_contributions(const RidgeDecomposition& d, const StateVector& x);

/// Sum of term_contributions, accumulated in the same order, so
/// sum(term_contributions) == ridge_eval holds exactly.
double ridge_eval(const RidgeDecomposition& d, const StateVector& x);

struct EquivalenceReport {
    double direct = 0.0;
    double ridge = 0.0;
    double abs_diff = 0.0;
    bool pass = false;
    int n_qubits = 0;
    std::vector<std::size_t> selector;
};

/// Evaluates the same measurement both ways: directly by simulating the
/// circuit, and through the row decomposition of its unitary.
EquivalenceReport verify_equivalence(const ParamCircuit& circuit, const std::vector<double>& theta,
                                     const MeasurementSelector& sel, const StateVector& x,
                                     double tol);

}  // namespace qridge
