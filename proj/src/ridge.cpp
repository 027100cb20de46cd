#include "qridge/ridge.hpp"

#include <cmath>
#include <stdexcept>

namespace qridge {

RidgeDecomposition extract_rows(const CMatrix& w, const MeasurementSelector& sel) {
    if (w.rows != w.cols) throw std::invalid_argument("extract_rows: matrix not square");
    if (unitarity_defect(w) >= 1e-10) throw std::invalid_argument("extract_rows: not unitary");
    RidgeDecomposition d;
    d.dimension = w.rows;
    d.selector = make_selector(sel.indices, w.rows);
    d.terms.reserve(d.selector.indices.size());
    for (std::size_t idx : d.selector.indices) d.terms.push_back({w.row(idx), idx});
    return d;
}

std::vector<double> term_contributions(const RidgeDecomposition& d, const StateVector& x) {
    if (x.dim() != d.dimension)
        throw std::invalid_argument("term_contributions: state dimension mismatch");
    std::vector<double> out;
    out.reserve(d.terms.size());
    for (const auto& t : d.terms) out.push_back(std::norm(bra_apply(t.direction, x.amplitudes)));
    return out;
}

double ridge_eval(const RidgeDecomposition& d, const StateVector& x) {
    double acc = 0.0;
    for (double v : term_contributions(d, x)) acc += v;
    return acc;
}

EquivalenceReport verify_equivalence(const ParamCircuit& circuit, const std::vector<double>& theta,
                                     const MeasurementSelector& sel, const StateVector& x,
                                     double tol) {
    const StateVector out = run_circuit(circuit, theta, x);
    const double direct = selector_expectation(out, sel);
    const CMatrix w = circuit_unitary(circuit, theta);
    const RidgeDecomposition d = extract_rows(w, sel);
    const double ridge = ridge_eval(d, x);

    EquivalenceReport rep;
    rep.direct = direct;
    rep.ridge = ridge;
    rep.abs_diff = std::abs(direct - ridge);
    rep.pass = rep.abs_diff < tol;
    rep.n_qubits = circuit.n_qubits;
    rep.selector = sel.indices;
    return rep;
}

}  // namespace qridge
